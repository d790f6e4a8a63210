"""
領域層 - 樹對、Conway 記號、連結圖、帶號圖與椅子圖
"""

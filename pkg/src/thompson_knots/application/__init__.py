"""
應用層：JSON 資料傳輸物件與驗證流程
"""

"""
Conway 記號領域
"""

from .entities import (Closure, Concat, ConwayExpr, IntTangle, Product, Sum,
                       concat_of, product_of)

__all__ = ["ConwayExpr", "IntTangle", "Product", "Sum", "Concat", "Closure", "product_of", "concat_of"]

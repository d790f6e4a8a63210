"""
Conway 記號語法樹

乘積依左結合建構，形狀即語意（乘法不滿足結合律），因此
Product(Product(3, 4), 2) 與 Product(3, Product(4, 2)) 是不同的運算式。
"""

from typing import List, Union

from pydantic import BaseModel


class IntTangle(BaseModel):
    """整數纏結 n（n 可為 0 或負數）"""

    class Config:
        frozen = True

    value: int


class Product(BaseModel):
    class Config:
        frozen = True

    left: "ConwayExpr"
    right: "ConwayExpr"


class Sum(BaseModel):
    class Config:
        frozen = True

    left: "ConwayExpr"
    right: "ConwayExpr"


class Concat(BaseModel):
    class Config:
        frozen = True

    left: "ConwayExpr"
    right: "ConwayExpr"


class Closure(BaseModel):
    """閉包只出現在根節點"""

    class Config:
        frozen = True

    inner: "ConwayExpr"


ConwayExpr = Union[IntTangle, Product, Sum, Concat, Closure]

for _model in (Product, Sum, Concat, Closure):
    _model.model_rebuild()


def product_of(values: List[int]) -> ConwayExpr:
    """x1 x2 … xn 的左結合乘積"""
    if not values:
        raise ValueError("product needs at least one factor")
    expr: ConwayExpr = IntTangle(value=values[0])
    for value in values[1:]:
        expr = Product(left=expr, right=IntTangle(value=value))
    return expr


def concat_of(values: List[int]) -> ConwayExpr:
    """x1,x2,…,xn 的左結合串接"""
    if not values:
        raise ValueError("concatenation needs at least one term")
    expr: ConwayExpr = IntTangle(value=values[0])
    for value in values[1:]:
        expr = Concat(left=expr, right=IntTangle(value=value))
    return expr

"""
Conway 記號解析、輸出與連分數

文法：
    top    := "[" expr "]" | expr
    expr   := concat
    concat := sum ("," sum)*
    sum    := prod ("+" prod)*
    prod   := atom (WS atom)*
    atom   := INT | "(" expr ")"
    INT    := "-"? [0-9]+

相鄰因子之間必須有空白，所以 "212" 是單一整數 212。
"""

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional

import structlog

from ...core.exceptions import ConwaySyntaxError, UnsupportedShapeError
from ...domains.conway.entities import (Closure, Concat, ConwayExpr, IntTangle,
                                        Product, Sum)

logger = structlog.get_logger(__name__)

_TOKEN = re.compile(r" *(?:(?P<int>-?\d+)|(?P<sym>[()\[\],+]))")


class Token(NamedTuple):
    kind: str  # "int" 或符號本身
    text: str
    position: int
    spaced: bool  # 前面是否有空白


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip(" ") == "":
            break
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            offending = position + (len(text[position:]) - len(text[position:].lstrip(" ")))
            raise ConwaySyntaxError(f"unexpected character {text[offending]!r}", offending)
        start = match.start("int") if match.group("int") is not None else match.start("sym")
        spaced = start > position or position == 0
        if match.group("int") is not None:
            tokens.append(Token("int", match.group("int"), start, spaced))
        else:
            symbol = match.group("sym")
            tokens.append(Token(symbol, symbol, start, spaced))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def position(self) -> int:
        token = self.peek()
        return token.position if token is not None else len(self.text)

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token is None or token.kind != kind:
            found = "end of input" if token is None else repr(token.text)
            raise ConwaySyntaxError(f"expected {kind!r}, found {found}", self.position())
        return self.advance()

    def parse_top(self) -> ConwayExpr:
        if not self.tokens:
            raise ConwaySyntaxError("empty expression", 0)
        token = self.peek()
        if token is not None and token.kind == "[":
            self.advance()
            inner = self.parse_expr()
            self.expect("]")
            expr: ConwayExpr = Closure(inner=inner)
        else:
            expr = self.parse_expr()
        if self.peek() is not None:
            token = self.peek()
            if token.kind == "[":
                raise ConwaySyntaxError("closure is only allowed around the whole expression", token.position)
            raise ConwaySyntaxError(f"unexpected {token.text!r}", token.position)
        return expr

    def parse_expr(self) -> ConwayExpr:
        expr = self.parse_sum()
        while self.peek() is not None and self.peek().kind == ",":
            self.advance()
            expr = Concat(left=expr, right=self.parse_sum())
        return expr

    def parse_sum(self) -> ConwayExpr:
        expr = self.parse_product()
        while self.peek() is not None and self.peek().kind == "+":
            self.advance()
            expr = Sum(left=expr, right=self.parse_product())
        return expr

    def parse_product(self) -> ConwayExpr:
        expr = self.parse_atom()
        while self.peek() is not None and self.peek().kind in ("int", "("):
            token = self.peek()
            if not token.spaced:
                raise ConwaySyntaxError("factors must be separated by whitespace", token.position)
            expr = Product(left=expr, right=self.parse_atom())
        return expr

    def parse_atom(self) -> ConwayExpr:
        token = self.peek()
        if token is None:
            raise ConwaySyntaxError("missing operand", len(self.text))
        if token.kind == "int":
            self.advance()
            return IntTangle(value=int(token.text))
        if token.kind == "(":
            self.advance()
            if self.peek() is not None and self.peek().kind == ")":
                raise ConwaySyntaxError("empty parentheses", self.position())
            expr = self.parse_expr()
            self.expect(")")
            return expr
        if token.kind == "[":
            raise ConwaySyntaxError("closure is only allowed around the whole expression", token.position)
        raise ConwaySyntaxError(f"missing operand before {token.text!r}", token.position)


def parse_conway(text: str) -> ConwayExpr:
    """解析 Conway 記號；詞法或結構錯誤拋出 ConwaySyntaxError（含位置）"""
    try:
        return _Parser(text).parse_top()
    except ConwaySyntaxError as error:
        logger.debug("Conway expression rejected", text=text, position=error.position)
        raise


# 優先序：逗號 < 加號 < 並列 < 原子
_CONCAT, _SUM, _PRODUCT, _ATOM = range(4)


def _print(expr: ConwayExpr, level: int) -> str:
    if isinstance(expr, IntTangle):
        return str(expr.value)
    if isinstance(expr, Product):
        text, own = f"{_print(expr.left, _PRODUCT)} {_print(expr.right, _ATOM)}", _PRODUCT
    elif isinstance(expr, Sum):
        text, own = f"{_print(expr.left, _SUM)}+{_print(expr.right, _PRODUCT)}", _SUM
    elif isinstance(expr, Concat):
        text, own = f"{_print(expr.left, _CONCAT)},{_print(expr.right, _SUM)}", _CONCAT
    elif isinstance(expr, Closure):
        raise UnsupportedShapeError("closure may only appear at the root")
    else:
        raise UnsupportedShapeError(f"unknown node {type(expr).__name__}")
    return f"({text})" if own < level else text


def print_conway(expr: ConwayExpr) -> str:
    """正規文字形式，parse_conway(print_conway(e)) == e"""
    if isinstance(expr, Closure):
        return f"[{_print(expr.inner, _CONCAT)}]"
    return _print(expr, _CONCAT)


def product_factors(expr: ConwayExpr) -> List[int]:
    """左結合整數乘積 x1 x2 … xn 的因子；其他形狀拋出 UnsupportedShapeError"""
    if isinstance(expr, Closure):
        expr = expr.inner
    factors: List[int] = []
    while isinstance(expr, Product):
        if not isinstance(expr.right, IntTangle):
            raise UnsupportedShapeError("product is not left-associated")
        factors.append(expr.right.value)
        expr = expr.left
    if not isinstance(expr, IntTangle):
        raise UnsupportedShapeError(f"expected an integer product, found {type(expr).__name__}")
    factors.append(expr.value)
    return factors[::-1]


def concat_terms(expr: ConwayExpr) -> List[ConwayExpr]:
    """攤平左結合的逗號串接"""
    if isinstance(expr, Closure):
        expr = expr.inner
    terms: List[ConwayExpr] = []
    while isinstance(expr, Concat):
        terms.append(expr.right)
        expr = expr.left
    terms.append(expr)
    return terms[::-1]


def rational_fraction(expr: ConwayExpr) -> Fraction:
    """cf(x1) = x1，cf(x1…xk) = xk + 1/cf(x1…xk-1)"""
    factors = product_factors(expr)
    if any(value <= 0 for value in factors):
        raise UnsupportedShapeError("rational fraction needs positive integer factors")
    value = Fraction(factors[0])
    for factor in factors[1:]:
        value = factor + 1 / value
    return value

"""
A 的整數係數 Laurent 多項式

以 {指數: 係數} 保存，零係數不出現，因此表示法唯一、可雜湊。
"""

from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

import sympy

A = sympy.Symbol("A")


class LaurentPoly:
    __slots__ = ("_terms", "_key")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        collected: Dict[int, int] = {}
        for exponent, coefficient in items:
            total = collected.get(int(exponent), 0) + int(coefficient)
            if total:
                collected[int(exponent)] = total
            else:
                collected.pop(int(exponent), None)
        self._terms = collected
        self._key = tuple(sorted(collected.items()))

    # ---- 建構 ----

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def delta(cls) -> "LaurentPoly":
        """迴圈因子 δ = −A² − A⁻²"""
        return cls({2: -1, -2: -1})

    # ---- 查詢 ----

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._key)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    @property
    def min_exponent(self) -> int:
        return self._key[0][0]

    @property
    def max_exponent(self) -> int:
        return self._key[-1][0]

    # ---- 運算 ----

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        product: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (exponent, coefficient), = self._terms.items()
            if coefficient not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly({exponent * power: coefficient ** (-power)})
        result = LaurentPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, offset: int) -> "LaurentPoly":
        """乘以 A^offset"""
        return LaurentPoly({e + offset: c for e, c in self._terms.items()})

    def invert_variable(self) -> "LaurentPoly":
        """代換 A ↔ A⁻¹"""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def divmod(self, divisor: "LaurentPoly") -> Tuple["LaurentPoly", "LaurentPoly"]:
        """以首項係數為 ±1 的除式做長除法"""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_exp, lead_coeff = divisor._key[-1]
        if lead_coeff not in (1, -1):
            raise ValueError("divisor must have a unit leading coefficient")
        quotient: Dict[int, int] = {}
        remainder = self
        span = divisor.max_exponent - divisor.min_exponent
        while not remainder.is_zero() and remainder.max_exponent - remainder.min_exponent >= span:
            exp, coeff = remainder._key[-1]
            step = LaurentPoly({exp - lead_exp: coeff * lead_coeff})
            quotient[exp - lead_exp] = quotient.get(exp - lead_exp, 0) + coeff * lead_coeff
            remainder = remainder - step * divisor
        return LaurentPoly(quotient), remainder

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return quotient

    def evaluate_at_i_root(self) -> Tuple[int, int]:
        """在 A² = i（A 為 8 次單位原根）求值，回傳高斯整數 (實部, 虛部)；只接受偶數指數"""
        real, imag = 0, 0
        for exponent, coefficient in self._terms.items():
            if exponent % 2:
                raise ValueError("odd exponent cannot be evaluated as a Gaussian integer")
            turn = (exponent // 2) % 4
            if turn == 0:
                real += coefficient
            elif turn == 1:
                imag += coefficient
            elif turn == 2:
                real -= coefficient
            else:
                imag -= coefficient
        return real, imag

    # ---- 比較與輸出 ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._key == LaurentPoly({0: other})._key
        return isinstance(other, LaurentPoly) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __lt__(self, other: "LaurentPoly") -> bool:
        return self._key < other._key

    def to_sympy(self) -> sympy.Expr:
        return sympy.Add(*[coefficient * A**exponent for exponent, coefficient in self._key])

    def to_json(self) -> Dict[str, Dict[str, int]]:
        return {"A": {str(exponent): coefficient for exponent, coefficient in self._key}}

    @classmethod
    def from_json(cls, data: Mapping[str, Mapping[str, int]]) -> "LaurentPoly":
        return cls({int(exponent): int(coefficient) for exponent, coefficient in data["A"].items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponent, coefficient in reversed(self._key):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "A" if exponent == 1 else f"A^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._key)!r})"

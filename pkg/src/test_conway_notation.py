"""
Conway 記號解析與連分數測試
"""

import os
import random
import sys
from fractions import Fraction

import pytest

# 添加專案路徑
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from thompson_knots.core.exceptions import (ConwaySyntaxError,
                                            UnsupportedShapeError)
from thompson_knots.domains.conway.entities import (Closure, Concat, IntTangle,
                                                    Product, Sum, concat_of,
                                                    product_of)
from thompson_knots.infrastructure.services.conway_parser import (
    concat_terms, parse_conway, print_conway, product_factors,
    rational_fraction)


def random_expr(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.3:
        return IntTangle(value=rng.randint(-5, 9))
    node = rng.choice([Product, Sum, Concat])
    return node(left=random_expr(rng, depth - 1), right=random_expr(rng, depth - 1))


def test_products_are_left_associated():
    assert parse_conway("3 4 2 5") == product_of([3, 4, 2, 5])
    assert parse_conway("3 (4 2)") == Product(left=IntTangle(value=3), right=product_of([4, 2]))
    assert parse_conway("3 4 2 5") != parse_conway("3 (4 (2 5))")


def test_precedence_comma_sum_product():
    assert parse_conway("1 2+3,4") == Concat(
        left=Sum(left=product_of([1, 2]), right=IntTangle(value=3)), right=IntTangle(value=4)
    )
    assert parse_conway("[2,3,7]") == Closure(inner=concat_of([2, 3, 7]))


def test_adjacent_digits_form_one_integer():
    assert parse_conway("212") == IntTangle(value=212)
    assert parse_conway("-3") == IntTangle(value=-3)


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("3 $", 2),
        ("(3 4", 4),
        ("3 [4]", 2),
        ("3,", 2),
        ("()", 1),
        ("3-4", 1),
        ("[3] 4", 4),
        ("3\t4", 1),
        ("[3]\n", 3),
    ],
)
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(ConwaySyntaxError) as info:
        parse_conway(text)
    assert info.value.position == position


def test_print_parse_round_trip():
    """parse_conway(print_conway(e)) == e"""
    rng = random.Random(17)
    for _ in range(1000):
        expr = random_expr(rng, 4)
        if rng.random() < 0.3:
            expr = Closure(inner=expr)
        assert parse_conway(print_conway(expr)) == expr


def test_canonical_printing():
    assert print_conway(parse_conway("[ 3   4 2  5 ]")) == "[3 4 2 5]"
    assert print_conway(parse_conway("(1+2) 3")) == "(1+2) 3"
    assert print_conway(parse_conway("1,(2,3)")) == "1,(2,3)"


def test_factors_and_terms():
    assert product_factors(parse_conway("[3 4 2 5]")) == [3, 4, 2, 5]
    assert [print_conway(t) for t in concat_terms(parse_conway("2,3 1,7"))] == ["2", "3 1", "7"]
    with pytest.raises(UnsupportedShapeError):
        product_factors(parse_conway("3 (4 2)"))
    with pytest.raises(UnsupportedShapeError):
        product_factors(parse_conway("1+2"))


@pytest.mark.parametrize(
    "text, fraction",
    [
        ("3", Fraction(3)),
        ("2 2", Fraction(5, 2)),
        ("3 2", Fraction(7, 3)),
        ("2 1 2", Fraction(8, 3)),
        ("3 4 2 5", Fraction(158, 29)),
    ],
)
def test_rational_fraction(text, fraction):
    """cf(x1…xk) = xk + 1/cf(x1…xk−1)"""
    assert rational_fraction(parse_conway(text)) == fraction


def test_rational_fraction_needs_positive_factors():
    with pytest.raises(UnsupportedShapeError):
        rational_fraction(parse_conway("3 -2"))

"""
Thompson 群核心運算測試
"""

import os
import random
import sys
from fractions import Fraction

import pytest

# 添加專案路徑
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from thompson_knots.core.exceptions import LeafCountMismatchError, TreeCodeError
from thompson_knots.domains.thompson.entities import (BinaryTree,
                                                      ThompsonElement,
                                                      iter_carets,
                                                      node_to_code,
                                                      parse_tree_code)
from thompson_knots.infrastructure.services.thompson_service import (
    compose, element_from_codes, element_to_partitions,
    enumerate_reduced_elements, evaluate, identity, inverse, is_reduced,
    random_element, random_tree, reduce, slopes, tree_from_code, tree_to_code)

IDENTITY = ThompsonElement(top=BinaryTree.leaf(), bottom=BinaryTree.leaf())
POINTS = [Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(5, 7), Fraction(1)]


def test_tree_code_round_trip():
    """前序位元字串解析後再輸出不變"""
    rng = random.Random(7)
    for _ in range(1000):
        tree = random_tree(rng, rng.randint(1, 12))
        assert node_to_code(parse_tree_code(tree.code)) == tree.code
        assert tree_to_code(tree_from_code(tree.code)) == tree.code
        assert tree.leaf_count == tree.caret_count + 1


@pytest.mark.parametrize(
    "code, index",
    [("", 0), ("10", 2), ("00", 1), ("102", 2), ("1x0", 1)],
)
def test_tree_code_errors_report_index(code, index):
    """格式錯誤時回報出錯位置"""
    with pytest.raises(TreeCodeError) as info:
        parse_tree_code(code)
    assert info.value.index == index


def test_leaf_count_mismatch():
    with pytest.raises(LeafCountMismatchError):
        element_from_codes("100", "0")


def test_carets_list_box_and_anchor():
    """右梳的每個 caret 都以上一個 caret 為 anchor"""
    assert list(iter_carets(parse_tree_code("1010100"))) == [(1, 0), (2, 1), (3, 2)]
    assert sorted(iter_carets(parse_tree_code("1110000"))) == [(1, 0), (2, 0), (3, 0)]


def test_reduce_removes_common_carets():
    element = element_from_codes("1100100", "1100100", reduced=False)
    assert not is_reduced(element)
    assert reduce(element) == IDENTITY


def test_reduce_is_idempotent():
    rng = random.Random(11)
    for _ in range(200):
        element = random_element(rng, max_leaves=8, reduced=False)
        once = reduce(element)
        assert is_reduced(once)
        assert reduce(once) == once


def test_group_laws():
    """結合律、單位元與反元素"""
    rng = random.Random(3)
    for _ in range(200):
        a, b, c = (random_element(rng, max_leaves=6) for _ in range(3))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))
        assert compose(a, IDENTITY) == a
        assert compose(IDENTITY, a) == a
        assert compose(a, inverse(a)) == IDENTITY


def test_compose_applies_right_factor_first():
    rng = random.Random(5)
    for _ in range(50):
        a, b = random_element(rng, max_leaves=6), random_element(rng, max_leaves=6)
        ab = compose(a, b)
        for x in POINTS:
            assert evaluate(ab, x) == evaluate(a, evaluate(b, x))


def test_partitions_and_slopes():
    """x0 = (上樹左梳, 下樹右梳)：把 [0, 1/2] 壓成 [0, 1/4]"""
    x0 = element_from_codes("11000", "10100")
    domain, target = element_to_partitions(x0)
    assert domain.as_fractions() == [0, Fraction(1, 2), Fraction(3, 4), 1]
    assert target.as_fractions() == [0, Fraction(1, 4), Fraction(1, 2), 1]
    assert slopes(x0) == [Fraction(1, 2), 1, 2]
    assert evaluate(x0, Fraction(1, 2)) == Fraction(1, 4)
    for element in enumerate_reduced_elements(4):
        for slope in slopes(element):
            assert slope.numerator & (slope.numerator - 1) == 0
            assert slope.denominator & (slope.denominator - 1) == 0


def test_opening_element_partitions():
    """六片葉的例子：定義域 {0, 1/4, 3/8, …}、值域 {0, 1/8, 1/4, …}"""
    element = element_from_codes("11100011000", "11010010100", reduced=False)
    domain, target = element_to_partitions(element)
    assert domain.as_fractions() == [Fraction(k, 8) for k in (0, 2, 3, 4, 6, 7, 8)]
    assert target.as_fractions() == [Fraction(k, 8) for k in (0, 1, 2, 4, 5, 6, 8)]
    assert slopes(element) == [Fraction(1, 2), 1, 2, Fraction(1, 2), 1, 2]


def test_evaluate_rejects_points_outside_interval():
    with pytest.raises(ValueError):
        evaluate(IDENTITY, Fraction(3, 2))


def test_enumeration_is_reduced_and_unique():
    elements = list(enumerate_reduced_elements(5))
    assert len(elements) == len(set(elements))
    assert all(is_reduced(element) for element in elements)
    assert identity(3) not in elements
    assert IDENTITY in elements

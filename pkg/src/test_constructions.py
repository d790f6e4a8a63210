"""
椅子圖構造與展開測試
"""

import os
import sys

import pytest

# 添加專案路徑
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from thompson_knots.core.exceptions import UnsupportedParameterError
from thompson_knots.domains.chairs.entities import (ChairKind,
                                                    ChairOrientation)
from thompson_knots.infrastructure.services.construction_service import (
    build_concat_diagram, build_product_diagram, build_chair_diagram, expand,
    expand_with_layout)

PRODUCT_CASES = [(1,), (2,), (3,), (4,), (2, 2), (3, 2), (2, 3), (2, 1, 2), (3, 4, 2, 5)]
CONCAT_CASES = [(2, 2), (2, 3), (3, 3), (2, 3, 7), (2, 2, 2)]


def test_product_block_sizes():
    """除了最後一塊，每塊比記號少一張椅子"""
    chairs = build_product_diagram((3, 4, 2, 5))
    assert chairs.kind is ChairKind.PRODUCT
    assert chairs.block_sizes == (2, 3, 1, 5)
    assert chairs.chair_count == 11
    assert [block.orientation for block in chairs.blocks] == [
        ChairOrientation.REFLECTED,
        ChairOrientation.NORMAL,
        ChairOrientation.REFLECTED,
        ChairOrientation.NORMAL,
    ]


@pytest.mark.parametrize("xs", PRODUCT_CASES)
def test_product_chair_count_formula(xs):
    assert build_product_diagram(xs).chair_count == sum(xs) - (len(xs) - 1)


@pytest.mark.parametrize("xs", CONCAT_CASES)
def test_concat_story_counts(xs):
    chairs = build_concat_diagram(xs)
    assert chairs.chair_count == sum(x - 2 for x in xs)
    assert chairs.pillar_count == len(xs)
    assert all(block.orientation is ChairOrientation.FLIPPED_REFLECTED for block in chairs.blocks)


@pytest.mark.parametrize(
    "builder, xs",
    [
        (build_product_diagram, ()),
        (build_product_diagram, (3, 0)),
        (build_concat_diagram, ()),
        (build_concat_diagram, (2, 1)),
    ],
)
def test_invalid_parameters(builder, xs):
    with pytest.raises(UnsupportedParameterError):
        builder(xs)


def test_single_block_tree_pair():
    """T(x)：上樹 10(110100)^x 0，下樹為 3x+2 葉的左梳"""
    element = expand(build_product_diagram((3,)))
    assert element.top.code == "10" + "110100" * 3 + "0"
    assert element.bottom.code == "1" * 10 + "0" * 11
    assert element.leaf_count == 11


def test_concat_two_stories_tree_pair():
    element = expand(build_concat_diagram((2, 2)))
    assert element.top.code == "10110011000"
    assert element.bottom.code == "11100100100"


@pytest.mark.parametrize("kind, xs", [("product", s) for s in PRODUCT_CASES] + [("concat", s) for s in CONCAT_CASES])
def test_layout_places_every_chair(kind, xs):
    chairs = build_chair_diagram(kind, xs)
    layout = expand_with_layout(chairs)
    assert len(layout.placements) == chairs.chair_count
    assert len({(placement.block, placement.position) for placement in layout.placements}) == chairs.chair_count
    leaves = layout.element.leaf_count
    for placement in layout.placements:
        assert all(1 <= box < leaves for box in placement.top_boxes + placement.bottom_boxes)
    assert layout.element.top.leaf_count == layout.element.bottom.leaf_count


def test_product_glue_grows_leaves():
    """每多一個區塊，樹對多出 3·椅子數 + 1 片葉"""
    single = expand(build_product_diagram((2,)))
    double = expand(build_product_diagram((3, 2)))
    assert single.leaf_count == 8
    assert double.leaf_count == single.leaf_count + 3 * 2 + 1

"""
椅子圖構造服務

T(x1…xn)：T(x) 是 x 張椅子排成一個區塊；
T(x1…xn+1) = glue(T(xn+1), R(T(x1…xn−1, xn − 1)))，
glue 把第二個樹對接在第一個的上樹最右葉與下樹最左葉，R 交換上下兩棵樹。

U(x1…xn)：每層樓一根柱子加上 xi−2 張翻轉反射椅子，
下一層的柱子接在上一層所有椅子的右側。
"""

from typing import List, NamedTuple, Sequence, Tuple

import structlog

from ...core.exceptions import UnsupportedParameterError
from ...domains.chairs.entities import (ChairBlock, ChairDiagram, ChairKind,
                                        ChairOrientation, ChairPlacement)
from ...domains.thompson.entities import (BinaryTree, Node, ThompsonElement,
                                          leftmost_leaf_replaced,
                                          node_leaf_count, parse_tree_code,
                                          rightmost_leaf_replaced)

logger = structlog.get_logger(__name__)


class ChairLayout(NamedTuple):
    """展開結果：未約化的樹對與每張椅子的位置"""
    element: ThompsonElement
    placements: Tuple[ChairPlacement, ...]


class _Piece(NamedTuple):
    top: Node
    bottom: Node
    placements: Tuple[ChairPlacement, ...]


def build_product_diagram(xs: Sequence[int]) -> ChairDiagram:
    """乘積族：區塊 i < n 有 xi − 1 張椅子，最後一塊有 xn 張；方向依 n − i 的奇偶交替"""
    xs = tuple(int(x) for x in xs)
    if not xs:
        raise UnsupportedParameterError("product construction needs at least one entry")
    if any(x < 1 for x in xs):
        raise UnsupportedParameterError(f"product construction needs positive entries, got {list(xs)}")
    n = len(xs)
    blocks = tuple(
        ChairBlock(
            index=i,
            count=xs[i - 1] - 1 if i < n else xs[i - 1],
            orientation=ChairOrientation.NORMAL if (n - i) % 2 == 0 else ChairOrientation.REFLECTED,
        )
        for i in range(1, n + 1)
    )
    return ChairDiagram(kind=ChairKind.PRODUCT, xs=xs, blocks=blocks)


def build_concat_diagram(xs: Sequence[int]) -> ChairDiagram:
    """串接族：第 i 層樓有一根柱子與 xi − 2 張翻轉反射椅子"""
    xs = tuple(int(x) for x in xs)
    if not xs:
        raise UnsupportedParameterError("concatenation construction needs at least one entry")
    if any(x < 2 for x in xs):
        raise UnsupportedParameterError(f"concatenation construction needs entries >= 2, got {list(xs)}")
    blocks = tuple(
        ChairBlock(index=i, count=x - 2, orientation=ChairOrientation.FLIPPED_REFLECTED, pillar=True)
        for i, x in enumerate(xs, start=1)
    )
    return ChairDiagram(kind=ChairKind.CONCAT, xs=xs, blocks=blocks)


def build_chair_diagram(kind: str, xs: Sequence[int]) -> ChairDiagram:
    if ChairKind(kind) is ChairKind.PRODUCT:
        return build_product_diagram(xs)
    return build_concat_diagram(xs)


# ---- 乘積族展開 ----

def _single_block(count: int, block: int) -> _Piece:
    """T(count)：上樹 10(110100)^count 0，下樹為左梳"""
    top = parse_tree_code("10" + "110100" * count + "0")
    bottom = parse_tree_code("1" * (3 * count + 1) + "0" * (3 * count + 2))
    placements = tuple(
        ChairPlacement(
            block=block,
            position=i,
            top_boxes=(3 * i - 1, 3 * i, 3 * i + 1),
            bottom_boxes=(3 * i - 2, 3 * i - 1, 3 * i),
        )
        for i in range(1, count + 1)
    )
    return _Piece(top, bottom, placements)


def _reflect(piece: _Piece) -> _Piece:
    return _Piece(piece.bottom, piece.top, tuple(p.swapped() for p in piece.placements))


def _glue(first: _Piece, second: _Piece) -> _Piece:
    offset = node_leaf_count(first.top) - 1
    return _Piece(
        rightmost_leaf_replaced(first.top, second.top),
        leftmost_leaf_replaced(second.bottom, first.bottom),
        first.placements + tuple(p.shifted(offset) for p in second.placements),
    )


def _product_piece(xs: List[int], last_count: int) -> _Piece:
    n = len(xs)
    head = _single_block(last_count, block=n)
    if n == 1:
        return head
    rest = xs[:-1]
    return _glue(head, _reflect(_product_piece(rest, rest[-1] - 1)))


# ---- 串接族展開 ----

def _right_comb(leaves: int) -> Node:
    node: Node = None
    for _ in range(leaves - 1):
        node = (None, node)
    return node


def _concat_piece(xs: Sequence[int]) -> _Piece:
    placements: List[ChairPlacement] = []
    stories: List[Node] = []
    bottoms: List[Node] = []
    index = 1  # 葉 0 是最左葉，葉 index 是本層的紅色葉
    for story, x in enumerate(xs, start=1):
        frc = x - 2
        spine: Node = (None, None)  # caret(紅色葉, 柱子)
        first = index + 2
        for position in range(1, frc + 1):
            alpha = first + 3 * (position - 1)
            spine = (spine, ((None, None), None))
            placements.append(
                ChairPlacement(
                    block=story,
                    position=position,
                    top_boxes=(alpha, alpha + 1, alpha + 2),
                    bottom_boxes=(alpha + 1, alpha + 2, alpha + 3),
                )
            )
        stories.append(spine)
        bottoms.append(_right_comb(3 * frc + 2))
        index += 2 + 3 * frc

    top: Node = None
    for spine in reversed(stories):
        top = (spine, top)
    top = (None, top)

    bottom: Node = (None, None)
    for comb in bottoms:
        bottom = (bottom, comb)
    return _Piece(top, bottom, tuple(placements))


def expand_with_layout(diagram: ChairDiagram) -> ChairLayout:
    if diagram.kind is ChairKind.PRODUCT:
        xs = list(diagram.xs)
        piece = _product_piece(xs, xs[-1])
    else:
        piece = _concat_piece(diagram.xs)
    element = ThompsonElement(top=BinaryTree.from_node(piece.top), bottom=BinaryTree.from_node(piece.bottom))
    logger.debug(
        "Chair diagram expanded",
        kind=diagram.kind.value,
        xs=list(diagram.xs),
        leaves=element.leaf_count,
        chairs=len(piece.placements),
    )
    return ChairLayout(element=element, placements=piece.placements)


def expand(diagram: ChairDiagram) -> ThompsonElement:
    """把每張椅子換成固定的 caret 樣式，組成完整（未約化）的樹對"""
    return expand_with_layout(diagram).element

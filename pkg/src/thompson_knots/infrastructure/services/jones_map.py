"""
ψ 與 ψ′：由 Thompson 樹對與椅子圖產生連結圖

ψ(e) 直接讀兩棵樹的 caret：上樹的 caret 是中線上方的正弧、下樹的 caret 是下方的負弧，
弧從 caret 左側的區域連到 caret 兩子樹之間的區域。這張未著色區域的帶號平面圖
經 medial 構造得到 PD。

ψ′(c) 不展開椅子：n 椅區塊直接換成 n 個交叉的整數纏結，在區域圖上就是 n 條同號邊。
乘積族的區塊是串聯的一串邊，依 T 的 glue/R 遞迴拼接；串接族每層樓的椅子與柱子的
caret 並聯在同一對區域之間。
"""

from typing import List, NamedTuple, Sequence, Tuple

import structlog

from ...domains.chairs.entities import ChairBlock, ChairDiagram, ChairKind
from ...domains.diagrams.entities import PlanarDiagram
from ...domains.graphs.entities import (MidlineArc, Side, Sign,
                                        SignedMidlineGraph, SignedPlanarGraph)
from ...domains.thompson.entities import ThompsonElement, iter_carets
from .graph_moves import graph_to_diagram, medial_diagram, midline_to_planar

logger = structlog.get_logger(__name__)


def _arc(left: int, right: int, sign: Sign) -> MidlineArc:
    side = Side.ABOVE if sign is Sign.POSITIVE else Side.BELOW
    return MidlineArc(left=left, right=right, sign=sign, side=side)


# ---- ψ ----

class PsiImage(NamedTuple):
    diagram: PlanarDiagram
    exterior: int  # 左側外部區域在 faces(diagram) 中的索引


def caret_graph(element: ThompsonElement) -> SignedMidlineGraph:
    """頂點 0 為左側外部區域，頂點 k 為葉 k−1 與 k 之間的區域"""
    arcs: List[MidlineArc] = [
        _arc(anchor, box, Sign.POSITIVE) for box, anchor in sorted(iter_carets(element.top.root))
    ]
    arcs.extend(_arc(anchor, box, Sign.NEGATIVE) for box, anchor in sorted(iter_carets(element.bottom.root)))
    return SignedMidlineGraph(vertices=element.leaf_count, arcs=tuple(arcs))


def element_graph(element: ThompsonElement) -> SignedPlanarGraph:
    return midline_to_planar(caret_graph(element))


def psi(element: ThompsonElement) -> PlanarDiagram:
    """交叉數等於兩棵樹的 caret 總數"""
    diagram = graph_to_diagram(element_graph(element))
    logger.debug("psi computed", leaves=element.leaf_count, crossings=diagram.crossing_count)
    return diagram


def psi_image(element: ThompsonElement) -> PsiImage:
    """ψ(e) 以及外部區域所在的面，供取回帶號平面圖時指定外部面"""
    medial = medial_diagram(element_graph(element))
    return PsiImage(medial.diagram, medial.region_faces[0])


# ---- ψ′ ----

class _BlockPiece(NamedTuple):
    vertices: int
    arcs: Tuple[MidlineArc, ...]


def _twist_block(count: int) -> _BlockPiece:
    """T(count)：角上的正弧 (0, 1)、count 條串聯正弧、回到外部的負弧"""
    arcs = [_arc(0, 1, Sign.POSITIVE)]
    arcs.extend(_arc(k, k + 1, Sign.POSITIVE) for k in range(1, count + 1))
    arcs.append(_arc(0, count + 1, Sign.NEGATIVE))
    return _BlockPiece(count + 2, tuple(arcs))


def _reflect_block(piece: _BlockPiece) -> _BlockPiece:
    """交換上下兩棵樹：每條弧換號並換到中線另一側"""
    arcs = tuple(
        MidlineArc(left=arc.left, right=arc.right, sign=arc.sign.opposite, side=arc.side.opposite)
        for arc in piece.arcs
    )
    return _BlockPiece(piece.vertices, arcs)


def _glue_blocks(first: _BlockPiece, second: _BlockPiece) -> _BlockPiece:
    """second 的上樹接在 first 上樹的最右葉，first 的下樹接在 second 下樹的最左葉"""
    offset = first.vertices - 1

    def moved(arc: MidlineArc) -> MidlineArc:
        if arc.left == 0:
            left = offset if arc.side is Side.ABOVE else 0
        else:
            left = arc.left + offset
        return MidlineArc(left=left, right=arc.right + offset, sign=arc.sign, side=arc.side)

    return _BlockPiece(first.vertices + offset, first.arcs + tuple(moved(arc) for arc in second.arcs))


def _product_blocks(blocks: Sequence[ChairBlock]) -> _BlockPiece:
    piece = _twist_block(blocks[0].count)
    for block in blocks[1:]:
        piece = _glue_blocks(_twist_block(block.count), _reflect_block(piece))
    return piece


def _concat_blocks(blocks: Sequence[ChairBlock]) -> _BlockPiece:
    """第 k 層樓佔區域 2k−1（紅葉左側）、2k（柱子左側）、2k+1（下一層紅葉左側）"""
    arcs = [_arc(0, 1, Sign.POSITIVE), _arc(0, 1, Sign.NEGATIVE)]
    for story, block in enumerate(blocks, start=1):
        red, pillar, following = 2 * story - 1, 2 * story, 2 * story + 1
        arcs.append(_arc(red, pillar, Sign.POSITIVE))
        arcs.extend(_arc(red, following, Sign.POSITIVE) for _ in range(block.count + 1))
        arcs.append(_arc(pillar, following, Sign.NEGATIVE))
        arcs.append(_arc(0, pillar, Sign.NEGATIVE))
    return _BlockPiece(2 * len(blocks) + 2, tuple(arcs))


def chair_graph(chairs: ChairDiagram) -> SignedMidlineGraph:
    """每張椅子一條邊的區域圖；n 椅區塊即 n 個交叉的整數纏結"""
    if chairs.kind is ChairKind.PRODUCT:
        piece = _product_blocks(chairs.blocks)
    else:
        piece = _concat_blocks(chairs.blocks)
    return SignedMidlineGraph(vertices=piece.vertices, arcs=piece.arcs)


def psi_prime(chairs: ChairDiagram) -> PlanarDiagram:
    """每個 n 椅區塊成為 n 交叉纏結，其餘 caret 依 ψ 的規則對應"""
    diagram = graph_to_diagram(midline_to_planar(chair_graph(chairs)))
    logger.debug(
        "psi' computed",
        kind=chairs.kind.value,
        xs=list(chairs.xs),
        chairs=chairs.chair_count,
        crossings=diagram.crossing_count,
    )
    return diagram

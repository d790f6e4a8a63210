"""
不變量服務：Kauffman bracket、writhe、Jones 集合、Goeritz 行列式

全部以精確整數運算完成，行列式交給 sympy。
"""

from functools import lru_cache
from itertools import product
from math import isqrt
from typing import FrozenSet, List, Optional, Sequence, Tuple

import structlog
import sympy
from networkx.utils import UnionFind

from ...core.config import settings
from ...core.exceptions import CrossingBoundError
from ...domains.diagrams.entities import GoeritzData, PlanarDiagram
from ...domains.diagrams.laurent import LaurentPoly
from ...domains.graphs.entities import Sign, SignedPlanarGraph
from ..adapters import BracketAdapterFactory
from ..ports.bracket import BracketPort
from .conway_parser import parse_conway
from .planar_diagram import (build_conway, checkerboard, components,
                             crossing_signs, face_index_of_corners,
                             unshaded_quadrants)

logger = structlog.get_logger(__name__)


def kauffman_bracket(diagram: PlanarDiagram, engine: Optional[BracketPort] = None) -> LaurentPoly:
    """⟨D⟩；無交叉單一圓圈為 1"""
    engine = engine or BracketAdapterFactory.create_adapter()
    return engine.bracket(diagram)


def writhe(diagram: PlanarDiagram, orientations: Sequence[bool] = ()) -> int:
    """orientations[k] 為真表示第 k 個分量反向"""
    return sum(crossing_signs(diagram, orientations))


def orientation_classes(diagram: PlanarDiagram) -> List[Tuple[bool, ...]]:
    """固定第一個分量方向後的 2^(k−1) 種方向組合（只計含交叉的分量）"""
    strands = components(diagram) - diagram.loops
    if strands <= 1:
        return [()]
    return [(False,) + choice for choice in product((False, True), repeat=strands - 1)]


def normalize_bracket(bracket: LaurentPoly, writhe_value: int) -> LaurentPoly:
    """(−A³)^(−w) · ⟨D⟩"""
    sign = -1 if writhe_value % 2 else 1
    return bracket.shift(-3 * writhe_value) * sign


def jones_set(diagram: PlanarDiagram, engine: Optional[BracketPort] = None) -> FrozenSet[LaurentPoly]:
    """所有方向類別下的 writhe 正規化 bracket；紐結時為單元素集合"""
    bracket = kauffman_bracket(diagram, engine)
    return frozenset(
        normalize_bracket(bracket, writhe(diagram, orientation))
        for orientation in orientation_classes(diagram)
    )


def goeritz_data(diagram: PlanarDiagram) -> GoeritzData:
    """外部面不著色；矩陣索引為未著色面，列和為零"""
    face_list, shaded, exterior = checkerboard(diagram)
    owner = face_index_of_corners(face_list)
    unshaded = [index for index, flag in enumerate(shaded) if not flag]
    unshaded.sort(key=lambda index: (index != exterior, index))
    position = {face: i for i, face in enumerate(unshaded)}
    size = len(unshaded)
    matrix = [[0] * size for _ in range(size)]
    for x in range(diagram.crossing_count):
        first, second, positive = unshaded_quadrants(diagram, owner, shaded, x)
        f, g = position[owner[(x, first)]], position[owner[(x, second)]]
        if f == g:
            continue
        weight = 1 if positive else -1
        matrix[f][g] -= weight
        matrix[g][f] -= weight
        matrix[f][f] += weight
        matrix[g][g] += weight
    return GoeritzData(
        faces=tuple(face_list),
        shaded=tuple(shaded),
        exterior=exterior,
        unshaded_faces=tuple(unshaded),
        matrix=tuple(tuple(row) for row in matrix),
    )


def goeritz_determinant(diagram: PlanarDiagram) -> int:
    """刪去外部面所在列與行後的 |det|，即連結行列式"""
    if not diagram.crossings and diagram.loops == 1:
        return 1
    data = goeritz_data(diagram)
    if len(data.unshaded_faces) == 1:
        return 1
    minor = sympy.Matrix([list(row[1:]) for row in data.matrix[1:]])
    return abs(int(minor.det()))


def jones_at_minus_one(poly: LaurentPoly) -> Tuple[int, int]:
    """t = A⁻⁴ = −1 時的值（高斯整數）"""
    return poly.evaluate_at_i_root()


def determinant_from_jones(poly: LaurentPoly) -> int:
    real, imag = jones_at_minus_one(poly)
    norm = real * real + imag * imag
    root = isqrt(norm)
    if root * root != norm:
        raise ArithmeticError(f"|V(-1)|^2 = {norm} is not a perfect square")
    return root


def bracket_from_graph(graph: SignedPlanarGraph, max_edges: Optional[int] = None) -> LaurentPoly:
    """Tait 圖狀態和：loops = 2k(S) + |S| − |V|

    正邊納入 S 代表 B 平滑，負邊納入 S 代表 A 平滑。
    """
    bound = settings.STATE_SUM_MAX_CROSSINGS if max_edges is None else max_edges
    if graph.edge_count > bound:
        raise CrossingBoundError(graph.edge_count, bound)

    delta = LaurentPoly.delta()
    total = LaurentPoly.zero()
    vertices = range(graph.vertex_count)
    for chosen in product((False, True), repeat=graph.edge_count):
        forest = UnionFind(vertices)
        a_minus_b = 0
        size = 0
        for include, edge in zip(chosen, graph.edges):
            if include:
                size += 1
                forest.union(edge.u, edge.v)
            smoothing_a = include if edge.sign is Sign.NEGATIVE else not include
            a_minus_b += 1 if smoothing_a else -1
        parts = len(list(forest.to_sets()))
        loops = 2 * parts + size - graph.vertex_count
        total = total + (delta ** (loops - 1)).shift(a_minus_b)
    return total


NAMED_CLASSES: Tuple[Tuple[str, str], ...] = (
    ("unknot", "[1]"),
    ("Hopf link", "[2]"),
    ("trefoil", "[3]"),
    ("Solomon link", "[4]"),
    ("figure-eight", "[2 2]"),
    ("cinquefoil", "[5]"),
    ("three-twist", "[3 2]"),
)


@lru_cache(maxsize=1)
def _named_jones_sets() -> Tuple[Tuple[str, FrozenSet[LaurentPoly]], ...]:
    return tuple((name, jones_set(build_conway(parse_conway(text)))) for name, text in NAMED_CLASSES)


def link_class(jones: FrozenSet[LaurentPoly]) -> str:
    """以 Jones 集合辨識小型連結（鏡像視為同類）；其餘以行列式命名"""
    mirrored = frozenset(poly.invert_variable() for poly in jones)
    for name, known in _named_jones_sets():
        if jones == known or mirrored == known:
            return name
    determinant = determinant_from_jones(min(jones))
    return f"det {determinant}"

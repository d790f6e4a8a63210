"""
PD 圖的纏結代數與組合拓撲

纏結框架：邊界端點逆時針依序為 N、W、S、E。
- add(F, G) 連接 F.E–G.N 與 F.S–G.W
- reflect 為對水平鏡面的平面反射，N 與 S 互換，分數變為倒數
- multiply(F, G) = add(G, reflect(F))
- concat(x1, …, xn) = Σ reflect(xi)
- closure 連接 N–E 與 S–W
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import structlog
from networkx.utils import UnionFind

from ...core.exceptions import (DiagramFormatError, DisconnectedDiagramError,
                                UnsupportedShapeError)
from ...domains.conway.entities import (Closure, Concat, ConwayExpr, IntTangle,
                                        Product, Sum)
from ...domains.diagrams.entities import (BoundaryEnd, Crossing,
                                          PlanarDiagram, TangleDiagram)

logger = structlog.get_logger(__name__)

Corner = Tuple[int, int]
Face = Tuple[Corner, ...]

_ORDER = (BoundaryEnd.N, BoundaryEnd.E, BoundaryEnd.S, BoundaryEnd.W)


# ---- 重新編號 ----

def _relabeling(
    crossings: Iterable[Crossing], boundary: Optional[Dict[BoundaryEnd, int]] = None
) -> Dict[int, int]:
    """舊編號 → 依首次出現順序的新編號 1..E（交叉在前，邊界在後）"""
    mapping: Dict[int, int] = {}
    for crossing in crossings:
        for edge in crossing:
            mapping.setdefault(edge, len(mapping) + 1)
    if boundary is not None:
        for end in _ORDER:
            mapping.setdefault(boundary[end], len(mapping) + 1)
    return mapping


def _canonical(
    crossings: Sequence[Crossing], boundary: Optional[Dict[BoundaryEnd, int]] = None
) -> Tuple[Tuple[Crossing, ...], Optional[Dict[BoundaryEnd, int]]]:
    """依首次出現順序重新編號，並讓較小的下穿線編號排在位置 0"""
    mapping = _relabeling(crossings, boundary)
    relabeled: List[Crossing] = []
    for crossing in crossings:
        a, b, c, d = (mapping[edge] for edge in crossing)
        relabeled.append((c, d, a, b) if c < a else (a, b, c, d))
    new_boundary = None
    if boundary is not None:
        new_boundary = {end: mapping[boundary[end]] for end in _ORDER}
    return tuple(relabeled), new_boundary


def _wire(
    crossings: Sequence[Crossing],
    loops: int,
    joins: Sequence[Tuple[int, int]],
    boundary: Optional[Dict[BoundaryEnd, int]],
) -> Tuple[Tuple[Crossing, ...], int, Optional[Dict[BoundaryEnd, int]]]:
    """把 joins 中的邊編號視為同一條邊，沒有端點的邊類別變成自由圓圈"""
    classes = UnionFind()
    for first, second in joins:
        classes.union(first, second)

    merged = [tuple(classes[edge] for edge in crossing) for crossing in crossings]
    merged_boundary = None if boundary is None else {end: classes[edge] for end, edge in boundary.items()}

    used = {edge for crossing in merged for edge in crossing}
    if merged_boundary is not None:
        used.update(merged_boundary.values())
    joined = {classes[edge] for pair in joins for edge in pair}
    free = len(joined - used)

    canonical, canonical_boundary = _canonical(merged, merged_boundary)  # type: ignore[arg-type]
    return canonical, loops + free, canonical_boundary


def _shifted(tangle: TangleDiagram, offset: int) -> Tuple[List[Crossing], Dict[BoundaryEnd, int]]:
    crossings = [tuple(edge + offset for edge in crossing) for crossing in tangle.crossings]
    boundary = {end: edge + offset for end, edge in tangle.boundary.items()}
    return crossings, boundary  # type: ignore[return-value]


def _max_edge(tangle: TangleDiagram) -> int:
    return max(list(tangle.boundary.values()) + [edge for crossing in tangle.crossings for edge in crossing])


def canonicalize(diagram: PlanarDiagram) -> PlanarDiagram:
    return canonicalize_with_mapping(diagram)[0]


def canonicalize_with_mapping(diagram: PlanarDiagram) -> Tuple[PlanarDiagram, Dict[int, int]]:
    """同 canonicalize，另外回傳舊邊編號到新編號的對應"""
    crossings, _ = _canonical(diagram.crossings)
    return PlanarDiagram(crossings=crossings, loops=diagram.loops), _relabeling(diagram.crossings)


# ---- 纏結代數 ----

def tangle_from_integer(n: int) -> TangleDiagram:
    """|n| 個交叉排成水平鏈；n > 0 時水平線在上，n < 0 時在下"""
    if n == 0:
        return TangleDiagram(
            crossings=(), boundary={BoundaryEnd.N: 1, BoundaryEnd.E: 1, BoundaryEnd.W: 2, BoundaryEnd.S: 2}
        )
    count = abs(n)
    top = list(range(1, count + 2))
    bottom = list(range(count + 2, 2 * count + 3))
    crossings: List[Crossing] = []
    for i in range(1, count + 1):
        nw, sw, se, ne = top[i - 1], bottom[i - 1], bottom[i], top[i]
        crossings.append((nw, sw, se, ne) if n > 0 else (sw, se, ne, nw))
    boundary = {BoundaryEnd.N: top[0], BoundaryEnd.W: bottom[0], BoundaryEnd.E: top[-1], BoundaryEnd.S: bottom[-1]}
    canonical, canonical_boundary = _canonical(crossings, boundary)
    return TangleDiagram(crossings=canonical, boundary=canonical_boundary)


def tangle_reflect(tangle: TangleDiagram) -> TangleDiagram:
    """對水平鏡面反射：每個四元組反轉方向，N 與 S 互換"""
    crossings = [(a, d, c, b) for a, b, c, d in tangle.crossings]
    boundary = {
        BoundaryEnd.N: tangle.boundary[BoundaryEnd.S],
        BoundaryEnd.S: tangle.boundary[BoundaryEnd.N],
        BoundaryEnd.E: tangle.boundary[BoundaryEnd.E],
        BoundaryEnd.W: tangle.boundary[BoundaryEnd.W],
    }
    canonical, canonical_boundary = _canonical(crossings, boundary)
    return TangleDiagram(crossings=canonical, loops=tangle.loops, boundary=canonical_boundary)


def tangle_add(first: TangleDiagram, second: TangleDiagram) -> TangleDiagram:
    """F 的 E、S 端分別接上 G 的 N、W 端"""
    offset = _max_edge(first)
    second_crossings, second_boundary = _shifted(second, offset)
    joins = [
        (first.boundary[BoundaryEnd.E], second_boundary[BoundaryEnd.N]),
        (first.boundary[BoundaryEnd.S], second_boundary[BoundaryEnd.W]),
    ]
    boundary = {
        BoundaryEnd.N: first.boundary[BoundaryEnd.N],
        BoundaryEnd.W: first.boundary[BoundaryEnd.W],
        BoundaryEnd.E: second_boundary[BoundaryEnd.E],
        BoundaryEnd.S: second_boundary[BoundaryEnd.S],
    }
    crossings, loops, new_boundary = _wire(
        list(first.crossings) + second_crossings, first.loops + second.loops, joins, boundary
    )
    return TangleDiagram(crossings=crossings, loops=loops, boundary=new_boundary)


def tangle_multiply(first: TangleDiagram, second: TangleDiagram) -> TangleDiagram:
    return tangle_add(second, tangle_reflect(first))


def tangle_concat(first: TangleDiagram, second: TangleDiagram) -> TangleDiagram:
    return tangle_add(tangle_reflect(first), tangle_reflect(second))


def tangle_concat_many(tangles: Sequence[TangleDiagram]) -> TangleDiagram:
    """x1, x2, …, xn 的 n 元串接：Σ reflect(xi)"""
    if not tangles:
        raise UnsupportedShapeError("concatenation needs at least one tangle")
    result = tangle_reflect(tangles[0])
    for tangle in tangles[1:]:
        result = tangle_add(result, tangle_reflect(tangle))
    return result


def multiply_by_zero(tangle: TangleDiagram) -> TangleDiagram:
    return tangle_multiply(tangle, tangle_from_integer(0))


def _close(tangle: TangleDiagram, pairs: Sequence[Tuple[BoundaryEnd, BoundaryEnd]]) -> PlanarDiagram:
    joins = [(tangle.boundary[a], tangle.boundary[b]) for a, b in pairs]
    crossings, loops, _ = _wire(tangle.crossings, tangle.loops, joins, None)
    return PlanarDiagram(crossings=crossings, loops=loops)


def closure(tangle: TangleDiagram) -> PlanarDiagram:
    """分子閉包：連接 N–E 與 S–W"""
    return _close(tangle, [(BoundaryEnd.N, BoundaryEnd.E), (BoundaryEnd.S, BoundaryEnd.W)])


def denominator_closure(tangle: TangleDiagram) -> PlanarDiagram:
    """分母閉包：連接 N–W 與 S–E"""
    return _close(tangle, [(BoundaryEnd.N, BoundaryEnd.W), (BoundaryEnd.S, BoundaryEnd.E)])


def mirror(diagram: PlanarDiagram) -> PlanarDiagram:
    """平面反射，得到鏡像連結"""
    crossings, _ = _canonical([(a, d, c, b) for a, b, c, d in diagram.crossings])
    return PlanarDiagram(crossings=crossings, loops=diagram.loops)


def build_conway(expr: ConwayExpr):
    """依語法樹建構纏結；根節點為閉包時回傳 PlanarDiagram"""
    if isinstance(expr, Closure):
        return closure(build_conway(expr.inner))
    if isinstance(expr, IntTangle):
        return tangle_from_integer(expr.value)
    if isinstance(expr, Product):
        return tangle_multiply(build_conway(expr.left), build_conway(expr.right))
    if isinstance(expr, Sum):
        return tangle_add(build_conway(expr.left), build_conway(expr.right))
    if isinstance(expr, Concat):
        terms: List[ConwayExpr] = []
        node: ConwayExpr = expr
        while isinstance(node, Concat):
            terms.append(node.right)
            node = node.left
        terms.append(node)
        return tangle_concat_many([build_conway(term) for term in reversed(terms)])
    raise UnsupportedShapeError(f"unknown node {type(expr).__name__}")


# ---- 組合拓撲 ----

def crossing_graph(diagram: PlanarDiagram) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(diagram.crossing_count))
    for edge, places in diagram.occurrences().items():
        (x, _), (y, _) = places
        graph.add_edge(x, y, key=edge)
    return graph


def is_connected(diagram: PlanarDiagram) -> bool:
    if not diagram.crossings:
        return diagram.loops <= 1
    return diagram.loops == 0 and nx.is_connected(crossing_graph(diagram))


def _other_occurrence(places: List[Tuple[int, int]], here: Tuple[int, int]) -> Tuple[int, int]:
    first, second = places
    return second if first == here else first


def faces(diagram: PlanarDiagram) -> List[Face]:
    """旋轉系統走面；角 (X, i) 為交叉 X 上位置 i 與 i+1 之間的象限"""
    if not diagram.crossings:
        if diagram.loops > 1:
            raise DisconnectedDiagramError(f"{diagram.loops} separate circles")
        return [(), ()]
    if not is_connected(diagram):
        raise DisconnectedDiagramError("diagram is not connected")

    occurrences = diagram.occurrences()
    visited = set()
    found: List[Face] = []
    for x in range(diagram.crossing_count):
        for i in range(4):
            if (x, i) in visited:
                continue
            cycle: List[Corner] = []
            corner = (x, i)
            while corner not in visited:
                visited.add(corner)
                cycle.append(corner)
                cx, ci = corner
                exit_slot = (cx, (ci + 1) % 4)
                edge = diagram.crossings[cx][exit_slot[1]]
                corner = _other_occurrence(occurrences[edge], exit_slot)
            found.append(tuple(cycle))

    if len(found) != diagram.crossing_count + 2:
        raise DiagramFormatError(
            f"Euler check failed: {diagram.crossing_count} crossings but {len(found)} faces"
        )
    return found


def exterior_face(face_list: Sequence[Face], candidates: Optional[Iterable[int]] = None) -> int:
    """角數最多的面；同數時取含最小角的面"""
    indices = range(len(face_list)) if candidates is None else candidates
    return min(indices, key=lambda index: (-len(face_list[index]), min(face_list[index], default=(0, 0))))


def face_index_of_corners(face_list: Sequence[Face]) -> Dict[Corner, int]:
    return {corner: index for index, face in enumerate(face_list) for corner in face}


def _shade(face_list: Sequence[Face], owner: Dict[Corner, int], outer: int) -> List[bool]:
    shaded: List[Optional[bool]] = [None] * len(face_list)
    shaded[outer] = False
    stack = [outer]
    while stack:
        current = stack.pop()
        for x, i in face_list[current]:
            for step in (1, 3):
                neighbour = owner[(x, (i + step) % 4)]
                if shaded[neighbour] is None:
                    shaded[neighbour] = not shaded[current]
                    stack.append(neighbour)
                elif shaded[neighbour] == shaded[current]:
                    raise DiagramFormatError("faces do not admit a checkerboard shading")
    return [bool(flag) for flag in shaded]


def _loops_by_colour(diagram: PlanarDiagram, owner: Dict[Corner, int], shaded: Sequence[bool]) -> Tuple[int, int]:
    """(未著色側, 著色側) 兩個對角象限落在同一面的交叉數"""
    counts = [0, 0]
    for x in range(diagram.crossing_count):
        for first in (0, 1):
            face = owner[(x, first)]
            if face == owner[(x, first + 2)]:
                counts[shaded[face]] += 1
    return counts[0], counts[1]


def checkerboard(diagram: PlanarDiagram, exterior: Optional[int] = None) -> Tuple[List[Face], List[bool], int]:
    """兩色著色，外部面不著色；回傳 (面, 是否著色, 外部面索引)

    未指定外部面時，取自環較少的一色為未著色側，再取該側角數最多的面。
    無作用交叉在其中一色的 Tait 圖上是自環，在另一色上是一條邊。
    """
    face_list = faces(diagram)
    owner = face_index_of_corners(face_list)
    outer = exterior_face(face_list) if exterior is None else exterior
    shaded = _shade(face_list, owner, outer)
    if exterior is None:
        unshaded_loops, shaded_loops = _loops_by_colour(diagram, owner, shaded)
        if unshaded_loops > shaded_loops:
            outer = exterior_face(face_list, [index for index, flag in enumerate(shaded) if flag])
            shaded = [not flag for flag in shaded]
    return face_list, shaded, outer


def components(diagram: PlanarDiagram) -> int:
    """沿 0↔2、1↔3 串接的連通分量數，加上自由圓圈"""
    graph = nx.Graph()
    for a, b, c, d in diagram.crossings:
        graph.add_edge(a, c)
        graph.add_edge(b, d)
    return nx.number_connected_components(graph) + diagram.loops


def strand_traversals(diagram: PlanarDiagram) -> List[List[Tuple[int, int]]]:
    """每個分量依預設方向走訪，記錄 (交叉索引, 進入位置)；分量依最小邊編號排序"""
    occurrences = diagram.occurrences()
    seen_edges = set()
    traversals: List[List[Tuple[int, int]]] = []
    for start_edge in sorted(occurrences):
        if start_edge in seen_edges:
            continue
        visits: List[Tuple[int, int]] = []
        entry = occurrences[start_edge][0]
        edge = start_edge
        while True:
            seen_edges.add(edge)
            visits.append(entry)
            x, position = entry
            exit_slot = (x, (position + 2) % 4)
            edge = diagram.crossings[x][exit_slot[1]]
            entry = _other_occurrence(occurrences[edge], exit_slot)
            if entry == visits[0]:
                seen_edges.add(edge)
                break
        traversals.append(visits)
    return traversals


def crossing_signs(diagram: PlanarDiagram, reversed_components: Sequence[bool] = ()) -> List[int]:
    """給定各分量方向時每個交叉的正負號；reversed_components[k] 為真表示第 k 個分量反向"""
    traversals = strand_traversals(diagram)
    under_entry: Dict[int, int] = {}
    over_entry: Dict[int, int] = {}
    for index, visits in enumerate(traversals):
        flip = index < len(reversed_components) and reversed_components[index]
        for x, position in visits:
            entered = (position + 2) % 4 if flip else position
            if entered % 2 == 0:
                under_entry[x] = entered
            else:
                over_entry[x] = entered
    signs = []
    for x in range(diagram.crossing_count):
        signs.append(1 if over_entry[x] == (under_entry[x] + 3) % 4 else -1)
    return signs


def gauss_code(diagram: PlanarDiagram) -> List[str]:
    """每個分量一行，例如 "O1+,U2+,O3+"；自由圓圈為空行"""
    signs = crossing_signs(diagram)
    lines = []
    for visits in strand_traversals(diagram):
        tokens = []
        for x, position in visits:
            layer = "O" if position % 2 else "U"
            tokens.append(f"{layer}{x + 1}{'+' if signs[x] > 0 else '-'}")
        lines.append(",".join(tokens))
    lines.extend("" for _ in range(diagram.loops))
    return lines


def diagram_summary(diagram: PlanarDiagram) -> Dict[str, int]:
    return {"crossings": diagram.crossing_count, "components": components(diagram), "loops": diagram.loops}


def unshaded_quadrants(
    diagram: PlanarDiagram, owner: Dict[Corner, int], shaded: Sequence[bool], x: int
) -> Tuple[int, int, bool]:
    """交叉 x 的兩個未著色象限與 Tait 符號（象限 0、2 未著色為正）"""
    positive = not shaded[owner[(x, 0)]]
    return (0, 2, True) if positive else (1, 3, False)

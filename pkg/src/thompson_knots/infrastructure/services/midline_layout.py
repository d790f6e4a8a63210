"""
中線排列：把帶號平面圖放到一條水平線上，並以 Reidemeister II 移動正規化

linearize 先找「正弧在上、負弧在下」的排列，找不到才接受任意兩頁排列。
normalize 分三階段：
1. 搬移放錯邊的弧（插入兩個頂點形成三段路徑）
2. 拆開有多條同號入弧的頂點
3. 補上缺少的入弧（新頂點加一對雙鍵）
"""

from typing import Dict, List, NamedTuple, Optional, Tuple

import networkx as nx
import structlog

from ...core.config import settings
from ...core.exceptions import NoEmbeddingError
from ...domains.graphs.entities import (MidlineArc, Side, Sign,
                                        SignedMidlineGraph, SignedPlanarGraph)
from .graph_moves import remove_loops

logger = structlog.get_logger(__name__)


def side_of(sign: Sign) -> Side:
    return Side.ABOVE if sign is Sign.POSITIVE else Side.BELOW


# ---- linearize ----

class _BudgetExceeded(Exception):
    pass


class _LayoutSearch:
    """回溯搜尋頂點順序；外部頂點固定在最左"""

    def __init__(self, graph: SignedPlanarGraph, sign_compatible: bool, budget: int):
        self.graph = graph
        self.sign_compatible = sign_compatible
        self.budget = budget
        self.nodes = 0
        self.neighbours: Dict[int, List[Tuple[int, int]]] = {v: [] for v in range(graph.vertex_count)}
        for index, edge in enumerate(graph.edges):
            self.neighbours[edge.u].append((index, edge.v))
            self.neighbours[edge.v].append((index, edge.u))
        self.order: List[int] = []
        self.position: Dict[int, int] = {}
        self.closed: List[Tuple[int, int, int]] = []
        self.open: Dict[int, int] = {}
        self.conflicts = nx.Graph()
        self.conflicts.add_nodes_from(range(graph.edge_count))

    def _side(self, edge_index: int) -> Side:
        return side_of(self.graph.edges[edge_index].sign)

    def _candidates(self) -> List[int]:
        if not self.order:
            return [self.graph.exterior]
        placed = set(self.order)
        rest = [v for v in range(self.graph.vertex_count) if v not in placed]
        return sorted(rest, key=lambda v: (not any(w in placed for _, w in self.neighbours[v]), v))

    def _new_arcs(self, vertex: int) -> List[Tuple[int, int]]:
        return [(index, self.position[w]) for index, w in self.neighbours[vertex] if w in self.position]

    def _feasible(self, vertex: int) -> Optional[List[Tuple[int, int]]]:
        """回傳放下 vertex 後新增的衝突對；同號模式下有衝突即回傳 None"""
        here = len(self.order)
        new_arcs = self._new_arcs(vertex)
        closing = {index for index, _ in new_arcs}
        found: List[Tuple[int, int]] = []
        for index, start in new_arcs:
            for left, right, other in self.closed:
                if left < start < right:
                    if self.sign_compatible:
                        if self._side(index) is self._side(other):
                            return None
                    else:
                        found.append((index, other))
            if self.sign_compatible:
                for other, left in self.open.items():
                    if other in closing or self._side(other) is not self._side(index):
                        continue
                    if start < left < here:
                        return None
        return found

    def _place(self, vertex: int) -> List[int]:
        here = len(self.order)
        self.order.append(vertex)
        self.position[vertex] = here
        opened = []
        for index, w in self.neighbours[vertex]:
            if w in self.position and w != vertex and index in self.open:
                self.closed.append((self.open.pop(index), here, index))
            elif w not in self.position and index not in self.open:
                self.open[index] = here
                opened.append(index)
        return opened

    def _unplace(self, vertex: int, opened: List[int]) -> None:
        here = self.position.pop(vertex)
        self.order.pop()
        for index in opened:
            del self.open[index]
        while self.closed and self.closed[-1][1] == here:
            left, _, index = self.closed.pop()
            self.open[index] = left

    def search(self) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded()
        if len(self.order) == self.graph.vertex_count:
            return True
        for vertex in self._candidates():
            found = self._feasible(vertex)
            if found is None:
                continue
            self.conflicts.add_edges_from(found)
            if not self.sign_compatible and not nx.is_bipartite(self.conflicts):
                self.conflicts.remove_edges_from(found)
                continue
            opened = self._place(vertex)
            if self.search():
                return True
            self._unplace(vertex, opened)
            self.conflicts.remove_edges_from(found)
        return False

    def sides(self) -> Dict[int, Side]:
        if self.sign_compatible:
            return {index: self._side(index) for index in range(self.graph.edge_count)}
        colour = nx.bipartite.color(self.conflicts)
        sides: Dict[int, Side] = {}
        for component in nx.connected_components(self.conflicts):
            agree = sum(1 for index in component if (colour[index] == 0) == (self._side(index) is Side.ABOVE))
            flip = 2 * agree < len(component)
            for index in component:
                sides[index] = Side.ABOVE if (colour[index] == 0) != flip else Side.BELOW
        return sides


def _midline_from_search(search: _LayoutSearch) -> SignedMidlineGraph:
    graph = search.graph
    sides = search.sides()
    arcs = []
    for index, edge in enumerate(graph.edges):
        a, b = search.position[edge.u], search.position[edge.v]
        arcs.append(MidlineArc(left=min(a, b), right=max(a, b), sign=edge.sign, side=sides[index]))
    arcs.sort(key=lambda arc: (arc.right, arc.left, arc.side.value))
    return SignedMidlineGraph(
        vertices=graph.vertex_count, arcs=tuple(arcs), labels=tuple(graph.label(v) for v in search.order)
    )


def linearize(
    graph: SignedPlanarGraph, max_vertices: Optional[int] = None, budget: Optional[int] = None
) -> SignedMidlineGraph:
    """兩頁排列：同側弧互不交錯；先刪除自環"""
    graph = remove_loops(graph)
    limit = settings.LINEARIZE_MAX_VERTICES if max_vertices is None else max_vertices
    budget = settings.LINEARIZE_SEARCH_BUDGET if budget is None else budget
    if graph.vertex_count > limit:
        logger.error("Graph too large for linearize", vertices=graph.vertex_count, limit=limit)
        raise NoEmbeddingError(
            f"{graph.vertex_count} vertices exceed the search limit {limit}",
            hint="raise TK_LINEARIZE_MAX_VERTICES or simplify the diagram first",
        )

    for sign_compatible in (True, False):
        search = _LayoutSearch(graph, sign_compatible, budget)
        try:
            found = search.search()
        except _BudgetExceeded:
            logger.info("Layout search budget exhausted", sign_compatible=sign_compatible, budget=budget)
            continue
        if found:
            logger.debug(
                "Midline layout found",
                vertices=graph.vertex_count,
                sign_compatible=sign_compatible,
                nodes=search.nodes,
            )
            return _midline_from_search(search)

    logger.error("No two-page layout found", vertices=graph.vertex_count, edges=graph.edge_count)
    raise NoEmbeddingError(
        "graph admits no two-page layout within the search budget",
        hint="subdivide edges with Reidemeister II insertions and retry",
    )


# ---- normalize ----

class NormalizationTrace(NamedTuple):
    graph: SignedMidlineGraph
    vertex_counts: Tuple[int, int, int]  # 各階段結束後的頂點數
    relocated: int
    splits: int
    supplies: int


class _Arrangement:
    """可插入頂點的中線排列；頂點以固定 id 表示，位置由 order 決定"""

    def __init__(self, graph: SignedMidlineGraph):
        self.order: List[int] = list(range(graph.vertices))
        self.labels: Dict[int, str] = {v: graph.label(v) for v in range(graph.vertices)}
        self.arcs: List[List] = [[arc.left, arc.right, arc.sign, arc.side] for arc in graph.arcs]
        self.next_id = graph.vertices
        self.serial: Dict[str, int] = {}

    def positions(self) -> Dict[int, int]:
        return {vertex: index for index, vertex in enumerate(self.order)}

    def fresh(self, prefix: str) -> Tuple[int, str]:
        self.serial[prefix] = self.serial.get(prefix, 0) + 1
        vertex = self.next_id
        self.next_id += 1
        return vertex, f"{prefix}{self.serial[prefix]}"

    def insert_after(self, anchor: int, prefix: str, label: Optional[str] = None) -> int:
        vertex, name = self.fresh(prefix)
        self.labels[vertex] = label or name
        self.order.insert(self.order.index(anchor) + 1, vertex)
        return vertex

    def insert_before(self, anchor: int, prefix: str) -> int:
        vertex, name = self.fresh(prefix)
        self.labels[vertex] = name
        self.order.insert(self.order.index(anchor), vertex)
        return vertex

    def add_arc(self, a: int, b: int, sign: Sign) -> None:
        self.arcs.append([a, b, sign, side_of(sign)])

    @staticmethod
    def span(arc: List, position: Dict[int, int]) -> Tuple[int, int]:
        a, b = position[arc[0]], position[arc[1]]
        return (a, b) if a < b else (b, a)

    def incoming(self, vertex: int, sign: Sign, position: Dict[int, int]) -> List[List]:
        at = position[vertex]
        return [arc for arc in self.arcs if arc[2] is sign and self.span(arc, position)[1] == at]

    def has_shorter(self, vertex: int, side: Side, rightward: bool, length: int, position: Dict[int, int]) -> bool:
        at = position[vertex]
        for arc in self.arcs:
            if arc[3] is not side:
                continue
            left, right = self.span(arc, position)
            if (left if rightward else right) == at and right - left < length:
                return True
        return False

    def to_graph(self) -> SignedMidlineGraph:
        position = self.positions()
        arcs = []
        for arc in self.arcs:
            left, right = self.span(arc, position)
            arcs.append(MidlineArc(left=left, right=right, sign=arc[2], side=arc[3]))
        arcs.sort(key=lambda arc: (arc.right, arc.left, arc.side.value))
        try:
            return SignedMidlineGraph(
                vertices=len(self.order), arcs=tuple(arcs), labels=tuple(self.labels[v] for v in self.order)
            )
        except ValueError as error:
            raise NoEmbeddingError(
                f"normalized arrangement is not planar: {error}",
                hint="an inserted arc crosses an existing one",
            ) from error


def _blocked(left: int, right: int, sign: Sign) -> NoEmbeddingError:
    """兩端都有同側較短的弧擋住，插入的路徑必然與之相交"""
    logger.warning("Relocation blocked at both ends", left=left, right=right, sign=sign.value)
    return NoEmbeddingError(
        f"{sign.value} arc ({left}, {right}) on the wrong side is blocked at both ends",
        hint="subdivide the blocking arcs with an RII pair and retry",
    )


def _relocate(layout: _Arrangement) -> int:
    moved = 0
    while True:
        position = layout.positions()
        wrong = [arc for arc in layout.arcs if side_of(arc[2]) is not arc[3]]
        if not wrong:
            return moved
        arc = min(
            wrong,
            key=lambda a: (layout.span(a, position)[0], a[2] is not Sign.POSITIVE, layout.span(a, position)[1]),
        )
        layout.arcs.remove(arc)
        left, right = layout.span(arc, position)
        u, w = layout.order[left], layout.order[right]
        length = right - left

        if arc[2] is Sign.POSITIVE:
            near_u = not layout.has_shorter(u, Side.BELOW, True, length, position)
            near_w = not layout.has_shorter(w, Side.BELOW, False, length, position)
            if not (near_u or near_w):
                raise _blocked(left, right, arc[2])
            if near_u:
                x = layout.insert_after(u, "x")
                y = layout.insert_after(x, "y")
                path = (Sign.POSITIVE, Sign.POSITIVE, Sign.NEGATIVE)
            else:
                x = layout.insert_before(w, "x")
                y = layout.insert_before(w, "y")
                path = (Sign.NEGATIVE, Sign.POSITIVE, Sign.POSITIVE)
        else:
            near_w = not layout.has_shorter(w, Side.ABOVE, False, length, position)
            near_u = not layout.has_shorter(u, Side.ABOVE, True, length, position)
            if not (near_u or near_w):
                raise _blocked(left, right, arc[2])
            if near_w:
                x = layout.insert_before(w, "x")
                y = layout.insert_before(w, "y")
                path = (Sign.POSITIVE, Sign.NEGATIVE, Sign.NEGATIVE)
            else:
                x = layout.insert_after(u, "x")
                y = layout.insert_after(x, "y")
                path = (Sign.NEGATIVE, Sign.NEGATIVE, Sign.POSITIVE)

        for (a, b), sign in zip(((u, x), (x, y), (y, w)), path):
            layout.add_arc(a, b, sign)
        moved += 1
        logger.debug("Arc relocated", left=left, right=right, sign=arc[2].value)


def _primed(label: str) -> str:
    if label.endswith("′"):
        return label[:-1] + "″"
    if label.endswith("″"):
        return label[:-1] + "‴"
    return label + "′"


def _split(layout: _Arrangement) -> int:
    splits = 0
    for sign in (Sign.POSITIVE, Sign.NEGATIVE):
        while True:
            position = layout.positions()
            crowded = [v for v in layout.order if len(layout.incoming(v, sign, position)) > 1]
            if not crowded:
                break
            k = crowded[0]
            at = position[k]
            incoming = sorted(
                layout.incoming(k, sign, position),
                key=lambda arc: layout.span(arc, position)[1] - layout.span(arc, position)[0],
            )
            keep = incoming[0]
            moving = list(incoming[1:])
            moving += [arc for arc in layout.arcs if layout.span(arc, position)[0] == at]

            d = layout.insert_after(k, "d")
            k_prime = layout.insert_after(d, "k", label=_primed(layout.labels[k]))
            for arc in moving:
                if arc is keep:
                    continue
                end = 0 if arc[0] == k else 1
                arc[end] = k_prime

            layout.add_arc(k, d, sign)
            layout.add_arc(d, k_prime, sign.opposite)
            splits += 1
            logger.debug("Vertex split", vertex=layout.labels[k], sign=sign.value, moved=len(moving))
    return splits


def _supply(layout: _Arrangement) -> int:
    supplies = 0
    for k in layout.order[1:]:
        for sign in (Sign.POSITIVE, Sign.NEGATIVE):
            if layout.incoming(k, sign, layout.positions()):
                continue
            f = layout.insert_before(k, "f")
            neighbour = layout.order[layout.order.index(f) - 1]
            layout.add_arc(f, k, sign)
            layout.add_arc(neighbour, f, Sign.POSITIVE)
            layout.add_arc(neighbour, f, Sign.NEGATIVE)
            supplies += 1
            logger.debug("Incoming arc supplied", vertex=layout.labels[k], sign=sign.value)
    return supplies


def normalize_with_trace(graph: SignedMidlineGraph) -> NormalizationTrace:
    layout = _Arrangement(graph)
    relocated = _relocate(layout)
    after_relocate = len(layout.order)
    splits = _split(layout)
    after_split = len(layout.order)
    supplies = _supply(layout)
    result = layout.to_graph() if relocated or splits or supplies else graph
    logger.debug(
        "Midline graph normalized",
        vertices=(graph.vertices, after_relocate, after_split, result.vertices),
        relocated=relocated,
        splits=splits,
        supplies=supplies,
    )
    return NormalizationTrace(result, (after_relocate, after_split, result.vertices), relocated, splits, supplies)


def normalize(graph: SignedMidlineGraph) -> SignedMidlineGraph:
    """以 RII 移動把中線圖變成 Thompson 形式；已是 Thompson 形式時原樣回傳"""
    return normalize_with_trace(graph).graph

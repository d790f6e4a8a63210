"""
帶號平面圖的轉換與 Reidemeister 圖移動

- midline_to_planar：由中線排列讀出旋轉系統
- graph_to_diagram：medial 構造，把帶號平面圖變成 PD
- RI：刪除自環、刪除一度頂點
- RII：收縮異號二度頂點、消去異號二邊形
"""

from typing import Dict, List, NamedTuple, Tuple

import structlog

from ...core.exceptions import DisconnectedDiagramError
from ...domains.diagrams.entities import Crossing, PlanarDiagram
from ...domains.graphs.entities import (GraphEdge, HalfEdge, Side, Sign,
                                        SignedMidlineGraph, SignedPlanarGraph)
from .planar_diagram import canonicalize, canonicalize_with_mapping, faces

logger = structlog.get_logger(__name__)


def midline_to_planar(graph: SignedMidlineGraph) -> SignedPlanarGraph:
    """頂點 v 周圍從正東開始逆時針：上方向右的弧（由短到長）、上方向左的弧（由長到短）、
    下方向左的弧（由短到長）、下方向右的弧（由長到短）"""
    edges = tuple(GraphEdge(u=arc.left, v=arc.right, sign=arc.sign) for arc in graph.arcs)
    rank = {index: (arc.length, index) for index, arc in enumerate(graph.arcs)}
    rotation: List[Tuple[HalfEdge, ...]] = []
    for vertex in range(graph.vertices):
        def pick(side: Side, rightward: bool) -> List[int]:
            return [
                index
                for index, arc in enumerate(graph.arcs)
                if arc.side is side and (arc.left if rightward else arc.right) == vertex
            ]

        above_right = sorted(pick(Side.ABOVE, True), key=rank.get)
        above_left = sorted(pick(Side.ABOVE, False), key=rank.get, reverse=True)
        below_left = sorted(pick(Side.BELOW, False), key=rank.get)
        below_right = sorted(pick(Side.BELOW, True), key=rank.get, reverse=True)
        rotation.append(
            tuple((index, 0) for index in above_right)
            + tuple((index, 1) for index in above_left)
            + tuple((index, 1) for index in below_left)
            + tuple((index, 0) for index in below_right)
        )
    return SignedPlanarGraph(
        vertex_count=graph.vertices, exterior=0, edges=edges, rotation=tuple(rotation), labels=graph.labels
    )


class MedialDiagram(NamedTuple):
    diagram: PlanarDiagram
    region_faces: Tuple[int, ...]  # 頂點 v 所在的面在 faces(diagram) 中的索引


def _medial_crossings(graph: SignedPlanarGraph) -> Tuple[List[Crossing], List[List[int]]]:
    """回傳 (未重新編號的交叉, 每個頂點周圍的角邊編號)"""
    next_corner: Dict[HalfEdge, int] = {}
    prev_corner: Dict[HalfEdge, int] = {}
    corners: List[List[int]] = []
    corner_id = 0
    for vertex, around in enumerate(graph.rotation):
        if not around:
            raise DisconnectedDiagramError(f"vertex {vertex} is isolated")
        ids = []
        for _ in around:
            corner_id += 1
            ids.append(corner_id)
        for k, half_edge in enumerate(around):
            next_corner[half_edge] = ids[k]
            prev_corner[half_edge] = ids[k - 1]
        corners.append(ids)

    crossings: List[Crossing] = []
    for index, edge in enumerate(graph.edges):
        hu, hv = (index, 0), (index, 1)
        if edge.sign is Sign.POSITIVE:
            crossings.append((next_corner[hu], prev_corner[hu], next_corner[hv], prev_corner[hv]))
        else:
            crossings.append((prev_corner[hu], next_corner[hv], prev_corner[hv], next_corner[hu]))
    return crossings, corners


def _check_edges(graph: SignedPlanarGraph) -> bool:
    if graph.edges:
        return True
    if graph.vertex_count != 1:
        raise DisconnectedDiagramError(f"{graph.vertex_count} vertices and no edges")
    return False


def graph_to_diagram(graph: SignedPlanarGraph) -> PlanarDiagram:
    """medial 構造：每條邊一個交叉，每個角（頂點周圍相鄰兩半邊之間）一條 PD 邊"""
    if not _check_edges(graph):
        return PlanarDiagram(crossings=(), loops=1)
    crossings, _ = _medial_crossings(graph)
    return canonicalize(PlanarDiagram(crossings=tuple(crossings), loops=0))


def medial_diagram(graph: SignedPlanarGraph) -> MedialDiagram:
    """graph_to_diagram 的結果，另外記下每個頂點成為哪一個未著色面"""
    if not _check_edges(graph):
        return MedialDiagram(PlanarDiagram(crossings=(), loops=1), (0,))
    crossings, corners = _medial_crossings(graph)
    diagram, mapping = canonicalize_with_mapping(PlanarDiagram(crossings=tuple(crossings), loops=0))
    # 有交叉時每個面由其邊集合唯一決定
    face_of_edges = {
        frozenset(diagram.crossings[x][(i + 1) % 4] for x, i in face): index
        for index, face in enumerate(faces(diagram))
    }
    region_faces = tuple(face_of_edges[frozenset(mapping[c] for c in ids)] for ids in corners)
    return MedialDiagram(diagram, region_faces)


class WorkingGraph:
    """可就地修改的帶號平面圖，供 Reidemeister 圖移動使用"""

    def __init__(self, graph: SignedPlanarGraph):
        self.edges: Dict[int, List] = {
            index: [edge.u, edge.v, edge.sign] for index, edge in enumerate(graph.edges)
        }
        self.rotation: Dict[int, List[HalfEdge]] = {
            vertex: list(around) for vertex, around in enumerate(graph.rotation)
        }
        self.exterior = graph.exterior
        self.labels = list(graph.labels) if graph.labels else [str(v) for v in range(graph.vertex_count)]
        self.moves: Dict[str, int] = {}

    # ---- 查詢 ----

    def _follows(self, vertex: int, first: HalfEdge, second: HalfEdge) -> bool:
        """second 是 first 在 vertex 周圍的逆時針下一個半邊"""
        around = self.rotation[vertex]
        return around[(around.index(first) + 1) % len(around)] == second

    def _record(self, move: str) -> None:
        self.moves[move] = self.moves.get(move, 0) + 1
        logger.debug("Graph move applied", move=move)

    def _drop_edge(self, edge_index: int) -> None:
        u, v = self.edges[edge_index][0], self.edges[edge_index][1]
        self.rotation[u].remove((edge_index, 0))
        self.rotation[v].remove((edge_index, 1))
        del self.edges[edge_index]

    # ---- RI ----

    def remove_loop(self, edge_index: int) -> bool:
        u, v = self.edges[edge_index][0], self.edges[edge_index][1]
        if u != v:
            return False
        self._drop_edge(edge_index)
        self._record("RI loop")
        return True

    def delete_leaf(self, vertex: int) -> bool:
        if vertex == self.exterior or len(self.rotation[vertex]) != 1:
            return False
        (edge_index, _), = self.rotation[vertex]
        if self.edges[edge_index][0] == self.edges[edge_index][1]:
            return False
        self._drop_edge(edge_index)
        del self.rotation[vertex]
        self._record("RI leaf")
        return True

    # ---- RII ----

    def cancel_digon(self, first: int, second: int) -> bool:
        """兩條平行異號邊在兩端都相鄰（方向一致）時一起刪除"""
        e1, e2 = self.edges[first], self.edges[second]
        if e1[2] is e2[2] or e1[0] == e1[1] or e2[0] == e2[1]:
            return False
        if {e1[0], e1[1]} != {e2[0], e2[1]}:
            return False
        u, v = e1[0], e1[1]
        h1u, h1v = (first, 0), (first, 1)
        h2u = (second, 0) if e2[0] == u else (second, 1)
        h2v = (second, 1) if e2[0] == u else (second, 0)
        consistent = (self._follows(u, h1u, h2u) and self._follows(v, h2v, h1v)) or (
            self._follows(u, h2u, h1u) and self._follows(v, h1v, h2v)
        )
        if not consistent:
            return False
        self._drop_edge(first)
        self._drop_edge(second)
        self._record("RII digon")
        return True

    def contract_series(self, vertex: int) -> bool:
        """收縮異號二度頂點：兩端頂點合併，z 的旋轉插入 y 原本 e1 的位置"""
        if vertex == self.exterior or len(self.rotation[vertex]) != 2:
            return False
        (i1, end1), (i2, end2) = self.rotation[vertex]
        e1, e2 = self.edges[i1], self.edges[i2]
        if i1 == i2 or e1[2] is e2[2] or e1[0] == e1[1] or e2[0] == e2[1]:
            return False
        y, z = e1[1 - end1], e2[1 - end2]
        if y == z or y == vertex or z == vertex:
            return False
        at_y, at_z = (i1, 1 - end1), (i2, 1 - end2)

        around_z = self.rotation[z]
        start = around_z.index(at_z)
        spliced = around_z[start + 1:] + around_z[:start]
        around_y = self.rotation[y]
        place = around_y.index(at_y)
        self.rotation[y] = around_y[:place] + spliced + around_y[place + 1:]

        for edge_index, end in spliced:
            self.edges[edge_index][end] = y
        del self.edges[i1]
        del self.edges[i2]
        del self.rotation[vertex]
        del self.rotation[z]
        if z == self.exterior:
            self.exterior = y
        self._record("RII contract")
        return True

    # ---- 批次化簡 ----

    def remove_all_loops(self) -> int:
        removed = 0
        for index in sorted(self.edges):
            if index in self.edges and self.remove_loop(index):
                removed += 1
        return removed

    def to_graph(self) -> SignedPlanarGraph:
        vertices = sorted(self.rotation, key=lambda v: (v != self.exterior, v))
        new_vertex = {old: new for new, old in enumerate(vertices)}
        edge_order = sorted(self.edges)
        new_edge = {old: new for new, old in enumerate(edge_order)}
        edges = tuple(
            GraphEdge(u=new_vertex[self.edges[i][0]], v=new_vertex[self.edges[i][1]], sign=self.edges[i][2])
            for i in edge_order
        )
        rotation = tuple(
            tuple((new_edge[index], end) for index, end in self.rotation[vertex]) for vertex in vertices
        )
        labels = tuple(self.labels[vertex] for vertex in vertices)
        return SignedPlanarGraph(vertex_count=len(vertices), exterior=0, edges=edges, rotation=rotation, labels=labels)


def remove_loops(graph: SignedPlanarGraph) -> SignedPlanarGraph:
    """RI：刪除所有自環（無作用交叉）"""
    working = WorkingGraph(graph)
    if working.remove_all_loops() == 0:
        return graph
    return working.to_graph()

"""
反向流程：由紐結圖找回 Thompson 元素

    PD ──extract_signed_graph──▶ 帶號平面圖 ──linearize──▶ 中線圖
       ──normalize──▶ Thompson 形式 ──graph_to_element──▶ 樹對

element_to_graph 是 graph_to_element 的反方向，走的是 ψ 的像：取回 ψ(e) 的帶號平面圖後，
正邊樹的前序走訪就是中線順序。結果與直接讀 caret 的 caret_graph(e) 相同。
"""

from typing import Dict, List, NamedTuple, Optional, Tuple

import structlog

from ...core.exceptions import DisconnectedDiagramError, ThompsonFormError
from ...domains.diagrams.entities import PlanarDiagram
from ...domains.graphs.entities import (GraphEdge, HalfEdge, MidlineArc, Side,
                                        Sign, SignedMidlineGraph,
                                        SignedPlanarGraph)
from ...domains.thompson.entities import BinaryTree, Node, ThompsonElement
from .jones_map import psi_image
from .midline_layout import linearize, normalize_with_trace
from .planar_diagram import (checkerboard, face_index_of_corners,
                             unshaded_quadrants)

logger = structlog.get_logger(__name__)


# ---- 樹對與中線圖 ----

def _other_end(graph: SignedPlanarGraph, half_edge: HalfEdge) -> int:
    edge = graph.edges[half_edge[0]]
    return edge.u if half_edge[1] == 1 else edge.v


def midline_order(graph: SignedPlanarGraph) -> SignedMidlineGraph:
    """正邊構成以外部頂點為根的樹時，依前序把頂點排到中線上

    非外部頂點的子節點為父半邊之後逆時針遇到的正半邊；外部頂點從負半邊之後的
    第一個正半邊開始。正邊不成樹時拋出 ThompsonFormError。
    """
    if not graph.edges:
        return SignedMidlineGraph(vertices=graph.vertex_count)

    position: Dict[int, int] = {}

    def children(vertex: int, parent: Optional[HalfEdge]) -> List[HalfEdge]:
        around = list(graph.rotation[vertex])
        if parent is not None:
            start = around.index(parent) + 1
        else:
            start = next(
                (k for k in range(len(around))
                 if graph.edges[around[k - 1][0]].sign is Sign.NEGATIVE
                 and graph.edges[around[k][0]].sign is Sign.POSITIVE),
                0,
            )
        ordered = around[start:] + around[:start]
        return [h for h in ordered if h != parent and graph.edges[h[0]].sign is Sign.POSITIVE]

    stack: List[Tuple[int, Optional[HalfEdge]]] = [(graph.exterior, None)]
    while stack:
        vertex, parent = stack.pop()
        if vertex in position:
            raise ThompsonFormError("positive edges contain a cycle", vertex)
        position[vertex] = len(position)
        pending = []
        for half_edge in children(vertex, parent):
            child = _other_end(graph, half_edge)
            if child == vertex:
                raise ThompsonFormError("positive loop", vertex)
            pending.append((child, (half_edge[0], 1 - half_edge[1])))
        stack.extend(reversed(pending))

    if len(position) != graph.vertex_count:
        missing = min(set(range(graph.vertex_count)) - set(position))
        raise ThompsonFormError("positive edges do not reach every region", missing)

    arcs = []
    for edge in graph.edges:
        left, right = sorted((position[edge.u], position[edge.v]))
        if left == right:
            raise ThompsonFormError("negative loop", left)
        side = Side.ABOVE if edge.sign is Sign.POSITIVE else Side.BELOW
        arcs.append(MidlineArc(left=left, right=right, sign=edge.sign, side=side))
    arcs.sort(key=lambda arc: (arc.sign is Sign.NEGATIVE, arc.right))
    return SignedMidlineGraph(vertices=graph.vertex_count, arcs=tuple(arcs))


def element_to_graph(element: ThompsonElement) -> SignedMidlineGraph:
    """頂點 0 為左側外部區域，頂點 k 為葉 k−1 與 k 之間的區域"""
    image = psi_image(element)
    return midline_order(extract_signed_graph(image.diagram, exterior=image.exterior))


def thompson_form_violations(graph: SignedMidlineGraph) -> List[Tuple[int, str]]:
    """(頂點, 原因) 列表；空列表代表滿足 Thompson 形式"""
    violations: List[Tuple[int, str]] = []
    for arc in graph.arcs:
        if (arc.sign is Sign.POSITIVE) != (arc.side is Side.ABOVE):
            violations.append((arc.right, f"{arc.sign.value} arc ({arc.left}, {arc.right}) lies {arc.side.value}"))
    for vertex in range(1, graph.vertices):
        for sign in Sign:
            count = len(graph.incoming(vertex, sign))
            if count != 1:
                violations.append((vertex, f"{count} incoming {sign.value} arcs"))
    return violations


def is_thompson_form(graph: SignedMidlineGraph) -> bool:
    return not thompson_form_violations(graph)


def _parents(graph: SignedMidlineGraph, sign: Sign) -> Dict[int, int]:
    return {arc.right: arc.left for arc in graph.arcs if arc.sign is sign}


def _tree_from_parents(parent: Dict[int, int], leaves: int) -> Node:
    def build(low: int, high: int, anchor: int) -> Node:
        if low == high:
            return None
        children = [v for v in range(low + 1, high + 1) if parent.get(v) == anchor]
        if not children:
            raise ThompsonFormError("arcs do not form a tree", low + 1)
        split = max(children)
        return (build(low, split - 1, anchor), build(split, high, split))

    return build(0, leaves - 1, 0)


def graph_to_element(graph: SignedMidlineGraph) -> ThompsonElement:
    """上方正弧樹為上樹、下方負弧樹為下樹；不滿足 Thompson 形式時拋出 ThompsonFormError"""
    violations = thompson_form_violations(graph)
    if violations:
        vertex, reason = violations[0]
        logger.warning("Graph is not in Thompson form", violations=len(violations), first=reason)
        raise ThompsonFormError(reason, vertex)
    top = _tree_from_parents(_parents(graph, Sign.POSITIVE), graph.vertices)
    bottom = _tree_from_parents(_parents(graph, Sign.NEGATIVE), graph.vertices)
    return ThompsonElement(top=BinaryTree.from_node(top), bottom=BinaryTree.from_node(bottom))


# ---- 由 PD 取出帶號平面圖 ----

def extract_signed_graph(diagram: PlanarDiagram, exterior: Optional[int] = None) -> SignedPlanarGraph:
    """未著色面為頂點、交叉為帶號邊；外部面為頂點 0，其餘依最小角排序

    exterior 為 faces(diagram) 中的面索引，預設取邊數最多的面。
    """
    if not diagram.crossings:
        if diagram.loops > 1:
            raise DisconnectedDiagramError(f"{diagram.loops} separate circles")
        return SignedPlanarGraph(vertex_count=1, rotation=((),))

    face_list, shaded, outer = checkerboard(diagram, exterior)
    owner = face_index_of_corners(face_list)
    unshaded = [outer] + [index for index in range(len(face_list)) if not shaded[index] and index != outer]
    vertex_of_face = {face: vertex for vertex, face in enumerate(unshaded)}

    edges: List[GraphEdge] = []
    end_of_corner: Dict[Tuple[int, int], HalfEdge] = {}
    for x in range(diagram.crossing_count):
        first, second, positive = unshaded_quadrants(diagram, owner, shaded, x)
        edges.append(
            GraphEdge(
                u=vertex_of_face[owner[(x, first)]],
                v=vertex_of_face[owner[(x, second)]],
                sign=Sign.POSITIVE if positive else Sign.NEGATIVE,
            )
        )
        end_of_corner[(x, first)] = (x, 0)
        end_of_corner[(x, second)] = (x, 1)

    # 面的走訪方向讓面在右手邊，逆時針旋轉即為走訪順序的反向
    rotation = tuple(
        tuple(end_of_corner[corner] for corner in reversed(face_list[face])) for face in unshaded
    )
    graph = SignedPlanarGraph(vertex_count=len(unshaded), edges=tuple(edges), rotation=rotation)
    positive, negative = graph.sign_counts()
    logger.debug("Signed graph extracted", vertices=graph.vertex_count, positive=positive, negative=negative)
    return graph


# ---- 完整流程 ----

class ReverseResult(NamedTuple):
    element: ThompsonElement
    signed_graph: SignedPlanarGraph
    midline: SignedMidlineGraph
    normalized: SignedMidlineGraph
    vertex_counts: Tuple[int, int, int]


def reverse_pipeline(diagram: PlanarDiagram) -> ReverseResult:
    signed_graph = extract_signed_graph(diagram)
    midline = linearize(signed_graph)
    trace = normalize_with_trace(midline)
    element = graph_to_element(trace.graph)
    logger.info(
        "Reverse pipeline finished",
        crossings=diagram.crossing_count,
        regions=signed_graph.vertex_count,
        relocated=trace.relocated,
        splits=trace.splits,
        supplies=trace.supplies,
        leaves=element.leaf_count,
    )
    return ReverseResult(element, signed_graph, midline, trace.graph, trace.vertex_counts)


def reverse(diagram: PlanarDiagram) -> ThompsonElement:
    """回傳（未約化的）樹對，其 ψ 像與輸入為同一個連結"""
    return reverse_pipeline(diagram).element

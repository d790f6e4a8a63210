"""
反向流程測試：取圖、中線排列、正規化、還原樹對
"""

import os
import sys

import pytest

# 添加專案路徑
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from thompson_knots.core.exceptions import (DisconnectedDiagramError,
                                            NoEmbeddingError,
                                            ThompsonFormError)
from thompson_knots.domains.diagrams.entities import PlanarDiagram
from thompson_knots.domains.graphs.entities import (MidlineArc, Side, Sign,
                                                    SignedMidlineGraph)
from thompson_knots.infrastructure.services.conway_parser import parse_conway
from thompson_knots.infrastructure.services.graph_moves import \
    midline_to_planar
from thompson_knots.infrastructure.services.invariant_service import jones_set
from thompson_knots.infrastructure.services.jones_map import caret_graph, psi
from thompson_knots.infrastructure.services.midline_layout import (
    linearize, normalize, normalize_with_trace)
from thompson_knots.infrastructure.services.planar_diagram import (
    build_conway, faces)
from thompson_knots.infrastructure.services.reverse_pipeline import (
    element_to_graph, extract_signed_graph, graph_to_element,
    is_thompson_form, midline_order, reverse, reverse_pipeline,
    thompson_form_violations)
from thompson_knots.infrastructure.services.thompson_service import (
    element_from_codes, enumerate_reduced_elements)


def arc(left, right, sign, side):
    return MidlineArc(left=left, right=right, sign=Sign(sign), side=Side(side))


# 兩條弧在錯誤的一側、兩個頂點有多條同號入弧
CROWDED = SignedMidlineGraph(
    vertices=5,
    arcs=(
        arc(0, 1, "+", "above"),
        arc(0, 2, "+", "above"),
        arc(0, 4, "-", "below"),
        arc(1, 2, "+", "above"),
        arc(1, 3, "+", "below"),
        arc(2, 3, "+", "above"),
        arc(2, 4, "-", "above"),
        arc(3, 4, "-", "below"),
    ),
)


def test_element_graph_is_thompson_form():
    for element in enumerate_reduced_elements(4):
        graph = element_to_graph(element)
        assert graph.vertices == element.leaf_count
        assert len(graph.arcs) == element.caret_count
        assert is_thompson_form(graph)


def test_element_to_graph_matches_caret_reading():
    """由 ψ 的像取回並排序的中線圖，與直接讀 caret 的結果相同"""
    for element in enumerate_reduced_elements(4):
        assert element_to_graph(element) == caret_graph(element)


def test_element_to_graph_of_unreduced_opening():
    element = element_from_codes("11100011000", "11010010100", reduced=False)
    assert element_to_graph(element) == caret_graph(element)


def test_midline_order_needs_a_positive_tree():
    planar = midline_to_planar(SignedMidlineGraph(vertices=3, arcs=(arc(0, 1, "+", "above"), arc(0, 2, "-", "below"))))
    with pytest.raises(ThompsonFormError):
        midline_order(planar)


def test_midline_order_of_edgeless_graph():
    planar = midline_to_planar(SignedMidlineGraph(vertices=1))
    assert midline_order(planar) == SignedMidlineGraph(vertices=1)


def test_graph_to_element_inverts_element_to_graph():
    for element in enumerate_reduced_elements(4):
        assert graph_to_element(element_to_graph(element)) == element


def test_unreduced_elements_survive_the_round_trip():
    element = element_from_codes("11100011000", "11010010100", reduced=False)
    assert graph_to_element(element_to_graph(element)) == element


def test_thompson_form_violations_are_reported():
    graph = SignedMidlineGraph(vertices=2, arcs=(arc(0, 1, "+", "above"),))
    violations = thompson_form_violations(graph)
    assert violations == [(1, "0 incoming - arcs")]
    with pytest.raises(ThompsonFormError) as info:
        graph_to_element(graph)
    assert info.value.vertex == 1


def test_midline_rejects_crossing_arcs():
    with pytest.raises(ValueError):
        SignedMidlineGraph(vertices=4, arcs=(arc(0, 2, "+", "above"), arc(1, 3, "+", "above")))


def test_midline_to_planar_rotation():
    """從正東逆時針：上方向右、上方向左、下方向左、下方向右"""
    graph = SignedMidlineGraph(
        vertices=3, arcs=(arc(0, 1, "+", "above"), arc(0, 2, "+", "above"), arc(1, 2, "-", "below"))
    )
    planar = midline_to_planar(graph)
    assert planar.rotation[0] == ((0, 0), (1, 0))
    assert planar.rotation[2] == ((1, 1), (2, 1))
    assert planar.rotation[1] == ((0, 1), (2, 0))


def test_extract_counts_edges_and_regions():
    for element in enumerate_reduced_elements(3):
        d = psi(element)
        if not d.crossings:
            continue
        graph = extract_signed_graph(d)
        assert graph.edge_count == d.crossing_count
        assert sorted(graph.sign_counts()) == sorted((element.top.caret_count, element.bottom.caret_count))
        assert graph.vertex_count < len(faces(d))


def test_extract_one_crossing_unknot():
    """預設外部面讓無作用交叉成為一條邊；以二角面為外部時得到一個頂點加自環"""
    d = build_conway(parse_conway("[1]"))
    default = extract_signed_graph(d)
    assert default.vertex_count == 2
    assert default.edge_count == 1
    assert default.edges[0].u != default.edges[0].v
    outer = next(index for index, face in enumerate(faces(d)) if len(face) == 2)
    other = extract_signed_graph(d, exterior=outer)
    assert other.vertex_count == 1
    assert other.edges[0].u == other.edges[0].v == 0


def test_extract_crossing_free():
    assert extract_signed_graph(PlanarDiagram(loops=1)).vertex_count == 1
    with pytest.raises(DisconnectedDiagramError):
        extract_signed_graph(PlanarDiagram(loops=2))


def test_linearize_keeps_arcs_planar_per_side():
    d = build_conway(parse_conway("[2 2]"))
    graph = extract_signed_graph(d)
    midline = linearize(graph)
    assert midline.vertices == graph.vertex_count
    assert len(midline.arcs) == graph.edge_count


def test_linearize_vertex_limit():
    graph = extract_signed_graph(build_conway(parse_conway("[3 2]")))
    with pytest.raises(NoEmbeddingError) as info:
        linearize(graph, max_vertices=1)
    assert "TK_LINEARIZE_MAX_VERTICES" in info.value.hint


def test_normalize_is_identity_on_thompson_form():
    graph = element_to_graph(element_from_codes("11000", "10100"))
    assert normalize(graph) is graph


def test_normalize_phases():
    """五個頂點：重新放置後 9 個、分裂後 15 個、補弧後 25 個"""
    trace = normalize_with_trace(CROWDED)
    assert trace.vertex_counts == (9, 15, 25)
    assert trace.relocated == 2
    assert trace.splits == 3
    assert trace.supplies == 10
    assert is_thompson_form(trace.graph)
    assert {"2′", "4′", "4″"} <= set(trace.graph.labels)


def test_relocation_blocked_at_both_ends():
    """下方的正弧兩端都有較短的下方弧：無法搬到上方"""
    graph = SignedMidlineGraph(
        vertices=5, arcs=(arc(0, 1, "-", "below"), arc(0, 4, "+", "below"), arc(3, 4, "-", "below"))
    )
    with pytest.raises(NoEmbeddingError) as info:
        normalize(graph)
    assert "blocked at both ends" in str(info.value)
    assert info.value.hint is not None


def test_reverse_crossing_free_unknot():
    element = reverse(PlanarDiagram(loops=1))
    assert element.leaf_count == 1


def test_reverse_hopf_link():
    hopf = build_conway(parse_conway("[2]"))
    result = reverse_pipeline(hopf)
    assert is_thompson_form(element_to_graph(result.element))
    assert jones_set(psi(result.element)) == jones_set(hopf)

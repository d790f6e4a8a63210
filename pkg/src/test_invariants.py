"""
不變量測試：bracket、Jones 集合、Goeritz 行列式
"""

import os
import sys

import pytest

# 添加專案路徑
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from thompson_knots.core.exceptions import CrossingBoundError
from thompson_knots.domains.diagrams.entities import PlanarDiagram
from thompson_knots.domains.diagrams.laurent import A, LaurentPoly
from thompson_knots.infrastructure.adapters import BracketAdapterFactory
from thompson_knots.infrastructure.services.conway_parser import parse_conway
from thompson_knots.infrastructure.services.invariant_service import (
    bracket_from_graph, determinant_from_jones, goeritz_data,
    goeritz_determinant, jones_set, kauffman_bracket, link_class, writhe)
from thompson_knots.infrastructure.services.jones_map import element_graph, psi
from thompson_knots.infrastructure.services.planar_diagram import (
    build_conway, closure, denominator_closure, mirror, tangle_reflect)
from thompson_knots.infrastructure.services.thompson_service import \
    enumerate_reduced_elements

TREFOIL = LaurentPoly({5: -1, -3: -1, -7: 1})
TREFOIL_JONES = LaurentPoly({4: 1, 12: 1, 16: -1})
CORPUS = ["[1]", "[2]", "[3]", "[4]", "[2 2]", "[3 2]", "[2 3]", "[2 1 2]", "[2,3]", "[3,3]", "[2,2,2]"]
KNOTS = ["[1]", "[3]", "[2 2]", "[3 2]", "[2 3]", "[3,3]"]


def diagram(text: str) -> PlanarDiagram:
    return build_conway(parse_conway(text))


def test_laurent_arithmetic():
    delta = LaurentPoly.delta()
    assert delta * delta == LaurentPoly({4: 1, 0: 2, -4: 1})
    assert (delta - delta).is_zero()
    assert LaurentPoly.monomial(3, -1) ** -1 == LaurentPoly.monomial(-3, -1)
    assert TREFOIL.invert_variable() == LaurentPoly({-5: -1, 3: -1, 7: 1})
    assert LaurentPoly.from_json(TREFOIL.to_json()) == TREFOIL
    assert TREFOIL.to_sympy() == -A**5 - A**-3 + A**-7
    quotient, remainder = (delta * TREFOIL).divmod(delta)
    assert quotient == TREFOIL and remainder.is_zero()


def test_bracket_of_circle_and_unlink():
    assert kauffman_bracket(PlanarDiagram(loops=1)) == LaurentPoly.one()
    assert kauffman_bracket(PlanarDiagram(loops=2)) == LaurentPoly.delta()


def test_hopf_bracket():
    assert kauffman_bracket(diagram("[2]")) == LaurentPoly({4: -1, -4: -1})


def test_trefoil_bracket():
    """[3] 依 Tait 規則為 A⁷ − A³ − A⁻⁵，即 −A⁵ − A⁻³ + A⁻⁷ 的鏡像"""
    bracket = kauffman_bracket(diagram("[3]"))
    assert bracket in (TREFOIL, TREFOIL.invert_variable())
    assert bracket == LaurentPoly({7: 1, 3: -1, -5: -1})


def test_trefoil_jones_and_writhe():
    trefoil = diagram("[3]")
    assert abs(writhe(trefoil)) == 3
    (jones,) = jones_set(trefoil)
    assert jones in (TREFOIL_JONES, TREFOIL_JONES.invert_variable())


def test_hopf_has_two_orientation_classes():
    assert len(jones_set(diagram("[2]"))) == 2


def test_knot_jones_exponents_are_multiples_of_four():
    for text in KNOTS:
        (jones,) = jones_set(diagram(text))
        assert all(exponent % 4 == 0 for exponent, _ in jones.items())


@pytest.mark.parametrize("text", CORPUS)
def test_mirror_inverts_variable(text):
    d = diagram(text)
    assert kauffman_bracket(mirror(d)) == kauffman_bracket(d).invert_variable()


@pytest.mark.parametrize("text", ["3", "2 2", "3 2", "2,3", "2 1 2"])
def test_reflection_swaps_closures(text):
    """bracket(closure(reflect t)) = bracket(denominator_closure(t)) 代換 A ↔ A⁻¹"""
    tangle = build_conway(parse_conway(text))
    assert kauffman_bracket(closure(tangle_reflect(tangle))) == (
        kauffman_bracket(denominator_closure(tangle)).invert_variable()
    )


@pytest.mark.parametrize(
    "text, determinant",
    [("[1]", 1), ("[2]", 2), ("[3]", 3), ("[2 2]", 5), ("[3 2]", 7), ("[2 1 2]", 8)],
)
def test_goeritz_determinant(text, determinant):
    assert goeritz_determinant(diagram(text)) == determinant


def test_goeritz_rows_sum_to_zero():
    data = goeritz_data(diagram("[3 2]"))
    assert all(sum(row) == 0 for row in data.matrix)
    assert data.unshaded_faces[0] == data.exterior


@pytest.mark.parametrize("text", CORPUS)
def test_determinant_matches_jones_at_minus_one(text):
    d = diagram(text)
    for jones in jones_set(d):
        assert determinant_from_jones(jones) == goeritz_determinant(d)


def test_engines_agree():
    frontier = BracketAdapterFactory.create_adapter("frontier")
    state_sum = BracketAdapterFactory.create_adapter("state_sum")
    for text in CORPUS:
        d = diagram(text)
        assert frontier.bracket(d) == state_sum.bracket(d)


def test_crossing_bound():
    engine = BracketAdapterFactory.create_adapter("state_sum", max_crossings=4)
    with pytest.raises(CrossingBoundError) as info:
        engine.bracket(diagram("[3 2]"))
    assert info.value.crossings == 5
    with pytest.raises(ValueError):
        BracketAdapterFactory.create_adapter("magic")


def test_tait_graph_state_sum_matches_diagram():
    """帶號平面圖的狀態和與其 medial PD 的 bracket 相同"""
    for element in enumerate_reduced_elements(4):
        assert bracket_from_graph(element_graph(element)) == kauffman_bracket(psi(element))


def test_link_class_names_small_links():
    assert link_class(jones_set(diagram("[3]"))) == "trefoil"
    assert link_class(jones_set(mirror(diagram("[3]")))) == "trefoil"
    assert link_class(jones_set(diagram("[2 2]"))) == "figure-eight"
    assert link_class(jones_set(diagram("[2 1 2]"))) == "det 8"

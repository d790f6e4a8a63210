"""
驗收測試：乘積與串接閉包、交換圖、行列式、反向流程、往返與椅子數
"""

import os
import random
import sys

import pytest

# 添加專案路徑
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from thompson_knots.infrastructure.services.construction_service import (
    build_concat_diagram, build_product_diagram, expand)
from thompson_knots.infrastructure.services.conway_parser import (
    parse_conway, rational_fraction)
from thompson_knots.infrastructure.services.invariant_service import (
    determinant_from_jones, goeritz_determinant, jones_set, kauffman_bracket)
from thompson_knots.infrastructure.services.jones_map import psi, psi_prime
from thompson_knots.infrastructure.services.planar_diagram import (
    build_conway, mirror, tangle_from_integer, tangle_reflect, closure,
    denominator_closure)
from thompson_knots.infrastructure.services.reverse_pipeline import (
    element_to_graph, graph_to_element, is_thompson_form, reverse_pipeline)
from thompson_knots.infrastructure.services.thompson_service import \
    enumerate_reduced_elements
from thompson_knots.infrastructure.services.verification_service import (
    CONCAT_CORPUS, PRODUCT_CORPUS, check_commute, check_construction,
    check_reduce_stability, conway_closure, run_checks)
from thompson_knots.domains.diagrams.laurent import LaurentPoly
from thompson_knots.domains.diagrams.entities import PlanarDiagram


# ---- 乘積閉包 ----

@pytest.mark.parametrize("xs", PRODUCT_CORPUS)
def test_product_closure_matches_psi_prime(xs):
    """ψ′(T(x1…xn)) 與 [x1 … xn] 的 Jones 集合完全相同"""
    result = check_construction("product", xs)
    assert result.equal, result.detail


# ---- 串接閉包 ----

@pytest.mark.parametrize("xs", CONCAT_CORPUS)
def test_concat_closure_matches_psi_prime(xs):
    built = psi_prime(build_concat_diagram(xs))
    assert jones_set(built) == jones_set(conway_closure("concat", xs))


# ---- 交換圖 ----

@pytest.mark.parametrize(
    "kind, xs", [("product", s) for s in PRODUCT_CORPUS] + [("concat", s) for s in CONCAT_CORPUS]
)
def test_commuting_square(kind, xs):
    """ψ(expand(c)) 與 ψ′(c) 是同一個連結"""
    assert check_commute(kind, xs).equal


# ---- 有理纏結行列式 ----

@pytest.mark.parametrize("xs, determinant", [((3,), 3), ((2, 2), 5), ((3, 2), 7)])
def test_fixed_determinants(xs, determinant):
    assert goeritz_determinant(conway_closure("product", xs)) == determinant


def test_random_determinants_match_fraction_numerators():
    rng = random.Random(2024)
    for _ in range(10):
        xs = [rng.randint(1, 4) for _ in range(rng.randint(1, 4))]
        text = " ".join(str(x) for x in xs)
        numerator = rational_fraction(parse_conway(text)).numerator
        assert goeritz_determinant(build_conway(parse_conway(f"[{text}]"))) == abs(numerator), text


# ---- 反向流程 ----

@pytest.mark.parametrize(
    "source",
    [
        lambda: build_conway(parse_conway("[3]")),
        lambda: build_conway(parse_conway("[2 2]")),
        lambda: psi(expand(build_product_diagram((3, 2)))),
    ],
    ids=["trefoil", "two-two", "psi-of-T(3,2)"],
)
def test_reverse_pipeline_recovers_the_link(source):
    diagram = source()
    result = reverse_pipeline(diagram)
    assert is_thompson_form(element_to_graph(result.element))
    assert jones_set(psi(result.element)) == jones_set(diagram)


# ---- 往返 ----

def test_graph_round_trip_is_exhaustive_up_to_five_leaves():
    count = 0
    for element in enumerate_reduced_elements(5):
        assert graph_to_element(element_to_graph(element)) == element
        count += 1
    assert count > 100


def test_reduce_does_not_change_the_link():
    for result in check_reduce_stability(seed=1, samples=10):
        assert result.equal, result.name


# ---- 不變量 ----

def test_invariant_sanity():
    assert kauffman_bracket(PlanarDiagram(loops=1)) == LaurentPoly.one()
    assert kauffman_bracket(build_conway(parse_conway("[2]"))) == LaurentPoly({4: -1, -4: -1})
    trefoil = kauffman_bracket(build_conway(parse_conway("[3]")))
    assert trefoil in (LaurentPoly({5: -1, -3: -1, -7: 1}), LaurentPoly({-5: -1, 3: -1, 7: 1}))
    for xs in PRODUCT_CORPUS:
        tangle = build_conway(parse_conway(" ".join(str(x) for x in xs)))
        assert kauffman_bracket(closure(tangle_reflect(tangle))) == (
            kauffman_bracket(denominator_closure(tangle)).invert_variable()
        )
        d = closure(tangle)
        assert kauffman_bracket(mirror(d)) == kauffman_bracket(d).invert_variable()
        for jones in jones_set(d):
            assert determinant_from_jones(jones) == goeritz_determinant(d)
    assert closure(tangle_from_integer(0)).loops == 2


# ---- 椅子數 ----

def test_chair_count_formula():
    chairs = build_product_diagram((3, 4, 2, 5))
    assert chairs.block_sizes == (2, 3, 1, 5)
    assert sum(chairs.block_sizes) == 11


@pytest.mark.parametrize("xs", PRODUCT_CORPUS)
def test_psi_prime_crossing_count(xs):
    chairs = build_product_diagram(xs)
    assert psi_prime(chairs).crossing_count == sum(xs) + len(xs) + 1
    assert conway_closure("product", xs).crossing_count == sum(xs)


def test_run_checks_uses_builtin_corpora():
    assert len(run_checks("product", xs=(3,))) == 1
    assert all(result.equal for result in run_checks("concat"))
    with pytest.raises(ValueError):
        run_checks("nothing")

"""
驗證服務：以 Jones 集合比對各條構造路徑

- product：ψ′(T(x1…xn)) 與 [x1 … xn]
- concat：ψ′(U(x1…xn)) 與 [x1,…,xn]
- commute：ψ(expand(c)) 與 ψ′(c)
- random：ψ(e) 與 ψ(reduce(e))
"""

import random
from typing import FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

import structlog

from ...core.config import settings
from ...domains.chairs.entities import ChairKind
from ...domains.diagrams.entities import PlanarDiagram
from ...domains.diagrams.laurent import LaurentPoly
from ..ports.bracket import BracketPort
from .construction_service import build_chair_diagram, expand
from .conway_parser import parse_conway
from .invariant_service import jones_set
from .jones_map import psi, psi_prime
from .planar_diagram import (build_conway, closure, tangle_concat_many,
                             tangle_from_integer)
from .thompson_service import random_element, reduce

logger = structlog.get_logger(__name__)

PRODUCT_CORPUS: Tuple[Tuple[int, ...], ...] = (
    (1,), (2,), (3,), (4,), (2, 2), (3, 2), (2, 3), (2, 1, 2), (3, 4, 2, 5),
)
CONCAT_CORPUS: Tuple[Tuple[int, ...], ...] = ((2, 2), (2, 3), (3, 3), (2, 3, 7), (2, 2, 2))


class CheckResult(NamedTuple):
    name: str
    left: FrozenSet[LaurentPoly]
    right: FrozenSet[LaurentPoly]
    detail: Optional[str] = None

    @property
    def equal(self) -> bool:
        return self.left == self.right


def conway_closure(kind: str, xs: Sequence[int]) -> PlanarDiagram:
    """乘積 [x1 … xn] 或串接 [x1,…,xn] 的閉包"""
    if ChairKind(kind) is ChairKind.PRODUCT:
        return build_conway(parse_conway("[" + " ".join(str(x) for x in xs) + "]"))
    if len(xs) == 1:
        return closure(tangle_concat_many([tangle_from_integer(xs[0])]))
    return build_conway(parse_conway("[" + ",".join(str(x) for x in xs) + "]"))


def _name(kind: str, xs: Sequence[int]) -> str:
    return f"{kind} {' '.join(str(x) for x in xs)}"


def check_construction(kind: str, xs: Sequence[int], engine: Optional[BracketPort] = None) -> CheckResult:
    built = psi_prime(build_chair_diagram(kind, xs))
    target = conway_closure(kind, xs)
    result = CheckResult(
        _name(kind, xs),
        jones_set(built, engine),
        jones_set(target, engine),
        detail=f"{built.crossing_count} vs {target.crossing_count} crossings",
    )
    logger.info("Construction checked", case=result.name, equal=result.equal)
    return result


def check_commute(kind: str, xs: Sequence[int], engine: Optional[BracketPort] = None) -> CheckResult:
    chairs = build_chair_diagram(kind, xs)
    full = psi(expand(chairs))
    short = psi_prime(chairs)
    result = CheckResult(
        _name(kind, xs),
        jones_set(full, engine),
        jones_set(short, engine),
        detail=f"{full.crossing_count} vs {short.crossing_count} crossings",
    )
    logger.info("Commuting square checked", case=result.name, equal=result.equal)
    return result


def check_reduce_stability(
    seed: Optional[int] = None,
    samples: int = 10,
    max_leaves: int = 6,
    engine: Optional[BracketPort] = None,
) -> List[CheckResult]:
    rng = random.Random(settings.RANDOM_SEED if seed is None else seed)
    results = []
    for _ in range(samples):
        element = random_element(rng, max_leaves=max_leaves, reduced=False, min_leaves=2)
        reduced = reduce(element)
        results.append(
            CheckResult(
                f"{element.top.code}/{element.bottom.code}",
                jones_set(psi(element), engine),
                jones_set(psi(reduced), engine),
                detail=f"{element.leaf_count} -> {reduced.leaf_count} leaves",
            )
        )
    logger.info("Reduce stability checked", samples=samples, equal=sum(r.equal for r in results))
    return results


def run_checks(
    check: str,
    xs: Sequence[int] = (),
    kind: str = "product",
    seed: Optional[int] = None,
    samples: int = 10,
    engine: Optional[BracketPort] = None,
) -> List[CheckResult]:
    """xs 為空時使用內建的測試集合"""
    if check in ("product", "concat"):
        corpus = [tuple(xs)] if xs else list(PRODUCT_CORPUS if check == "product" else CONCAT_CORPUS)
        return [check_construction(check, xs, engine) for xs in corpus]
    if check == "commute":
        if xs:
            return [check_commute(kind, xs, engine)]
        return [check_commute("product", xs, engine) for xs in PRODUCT_CORPUS] + [
            check_commute("concat", xs, engine) for xs in CONCAT_CORPUS
        ]
    if check == "random":
        return check_reduce_stability(seed, samples, engine=engine)
    raise ValueError(f"Unsupported check: {check}")

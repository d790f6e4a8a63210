"""
直接 2^c 狀態和 bracket 引擎，做為前沿引擎的獨立對照
"""

from itertools import product

import structlog
from networkx.utils import UnionFind

from ...core.config import settings
from ...core.exceptions import CrossingBoundError
from ...domains.diagrams.entities import PlanarDiagram
from ...domains.diagrams.laurent import LaurentPoly
from ..ports.bracket import BracketPort

logger = structlog.get_logger(__name__)


class StateSumBracketAdapter(BracketPort):
    """Σ_S A^(a−b) δ^(loops−1)，逐一枚舉平滑狀態"""

    name = "state_sum"

    def __init__(self, max_crossings: int = None):
        self._max_crossings = settings.STATE_SUM_MAX_CROSSINGS if max_crossings is None else max_crossings

    @property
    def max_crossings(self) -> int:
        return self._max_crossings

    def bracket(self, diagram: PlanarDiagram) -> LaurentPoly:
        count = diagram.crossing_count
        if count > self._max_crossings:
            logger.warning("Crossing bound exceeded", crossings=count, bound=self._max_crossings)
            raise CrossingBoundError(count, self._max_crossings)

        delta = LaurentPoly.delta()
        if count == 0:
            return delta ** max(diagram.loops - 1, 0)

        edges = diagram.edge_ids
        counts = {}
        for state in product((True, False), repeat=count):
            loops = UnionFind(edges)
            a_count = 0
            for use_a, (a, b, c, d) in zip(state, diagram.crossings):
                if use_a:
                    a_count += 1
                    loops.union(a, b)
                    loops.union(c, d)
                else:
                    loops.union(a, d)
                    loops.union(b, c)
            circles = len(list(loops.to_sets())) + diagram.loops
            key = (2 * a_count - count, circles)
            counts[key] = counts.get(key, 0) + 1

        total = LaurentPoly.zero()
        for (exponent, circles), multiplicity in counts.items():
            total = total + (delta ** (circles - 1)).shift(exponent) * multiplicity
        return total

"""
前沿收縮（frontier contraction）bracket 引擎

逐一處理交叉，只保存「已處理部分在前沿邊上的配對方式 → 多項式」，
每閉合一個圓圈乘一次 δ，最後整除 δ。狀態數取決於前沿寬度而非 2^c。
"""

from typing import Dict, FrozenSet, List, Set, Tuple

import structlog

from ...core.config import settings
from ...core.exceptions import CrossingBoundError
from ...domains.diagrams.entities import PlanarDiagram
from ...domains.diagrams.laurent import LaurentPoly
from ..ports.bracket import BracketPort

logger = structlog.get_logger(__name__)

Matching = FrozenSet[Tuple[int, int]]

# A 平滑連接位置 (0,1)(2,3)，B 平滑連接 (0,3)(1,2)
_SMOOTHINGS = ((1, ((0, 1), (2, 3))), (-1, ((0, 3), (1, 2))))


def _join(partner: Dict[int, int], s: int, t: int) -> int:
    """在前沿配對中加入一段連接 s、t 的弧，回傳閉合的圓圈數"""
    if s == t:
        return 1
    end_s = partner.pop(s, None)
    end_t = partner.pop(t, None)
    if end_s is not None and end_s == t:
        return 1
    if end_s is not None:
        partner.pop(end_s, None)
    if end_t is not None:
        partner.pop(end_t, None)
    left = s if end_s is None else end_s
    right = t if end_t is None else end_t
    partner[left] = right
    partner[right] = left
    return 0


def _freeze(partner: Dict[int, int]) -> Matching:
    return frozenset((a, b) for a, b in partner.items() if a < b)


class FrontierBracketAdapter(BracketPort):
    """精確、無 2^c 枚舉的 bracket 引擎"""

    name = "frontier"

    def __init__(self, max_crossings: int = None):
        self._max_crossings = settings.MAX_CROSSINGS if max_crossings is None else max_crossings

    @property
    def max_crossings(self) -> int:
        return self._max_crossings

    @staticmethod
    def crossing_order(diagram: PlanarDiagram) -> List[int]:
        """貪婪順序：每次選擇與目前前沿共用最多邊的交叉"""
        remaining = set(range(diagram.crossing_count))
        order: List[int] = []
        touched: Set[int] = set()
        while remaining:
            best = min(
                remaining,
                key=lambda index: (-sum(1 for edge in set(diagram.crossings[index]) if edge in touched), index),
            )
            remaining.discard(best)
            order.append(best)
            touched.update(diagram.crossings[best])
        return order

    def bracket(self, diagram: PlanarDiagram) -> LaurentPoly:
        count = diagram.crossing_count
        if count > self._max_crossings:
            logger.warning("Crossing bound exceeded", crossings=count, bound=self._max_crossings)
            raise CrossingBoundError(count, self._max_crossings)

        delta = LaurentPoly.delta()
        if count == 0:
            return delta ** max(diagram.loops - 1, 0)

        states: Dict[Matching, LaurentPoly] = {frozenset(): LaurentPoly.one()}
        widest = 1
        for index in self.crossing_order(diagram):
            crossing = diagram.crossings[index]
            next_states: Dict[Matching, LaurentPoly] = {}
            for matching, poly in states.items():
                for exponent, pairs in _SMOOTHINGS:
                    partner: Dict[int, int] = {}
                    for a, b in matching:
                        partner[a] = b
                        partner[b] = a
                    closed = 0
                    for i, j in pairs:
                        closed += _join(partner, crossing[i], crossing[j])
                    term = poly.shift(exponent) * (delta ** closed)
                    key = _freeze(partner)
                    next_states[key] = next_states[key] + term if key in next_states else term
            states = {key: value for key, value in next_states.items() if not value.is_zero()}
            widest = max(widest, len(states))

        total = states.get(frozenset(), LaurentPoly.zero())
        logger.debug("Frontier contraction finished", crossings=count, widest_frontier=widest)
        return total.exact_div(delta) * (delta ** diagram.loops)

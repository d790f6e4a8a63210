"""
Kauffman bracket 計算引擎介面
"""

from abc import ABC, abstractmethod

from ...domains.diagrams.entities import PlanarDiagram
from ...domains.diagrams.laurent import LaurentPoly


class BracketPort(ABC):
    """Kauffman bracket 計算引擎介面"""

    name: str = "abstract"

    @abstractmethod
    def bracket(self, diagram: PlanarDiagram) -> LaurentPoly:
        """計算 bracket，不做 writhe 正規化

        Args:
            diagram: 封閉連結圖

        Returns:
            ⟨D⟩，單一無交叉圓圈的值為 1

        Raises:
            CrossingBoundError: 交叉數超過引擎上限
        """
        pass

    @property
    @abstractmethod
    def max_crossings(self) -> int:
        """此引擎可處理的最大交叉數"""
        pass

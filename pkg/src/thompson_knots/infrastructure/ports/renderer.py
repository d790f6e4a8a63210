"""
樹對繪圖介面
"""

from abc import ABC, abstractmethod
from typing import Dict, Optional

from ...domains.thompson.entities import ThompsonElement


class TreePairRendererPort(ABC):
    """把樹對畫成向量圖的介面"""

    @abstractmethod
    def render(
        self,
        element: ThompsonElement,
        top_highlights: Optional[Dict[int, str]] = None,
        bottom_highlights: Optional[Dict[int, str]] = None,
        title: Optional[str] = None,
    ) -> str:
        """
        在 45° 格線上繪製樹對：上樹在葉線上方，下樹在下方。

        Args:
            element: 要繪製的樹對
            top_highlights: 上樹 caret 的 box 編號 → 群組名稱，同群組同色
            bottom_highlights: 下樹 caret 的 box 編號 → 群組名稱
            title: 圖標題

        Returns:
            str: SVG 文字，相同輸入產生相同輸出
        """
        pass

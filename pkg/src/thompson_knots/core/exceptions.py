"""
領域錯誤定義

每個錯誤同時繼承對應的內建例外，呼叫端可以只捕捉 ValueError / RuntimeError。
"""

from typing import Optional


class ThompsonKnotsError(Exception):
    """所有領域錯誤的基底類別"""


class TreeCodeError(ThompsonKnotsError, ValueError):
    """前序位元字串格式錯誤"""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (at index {index})")
        self.index = index


class LeafCountMismatchError(ThompsonKnotsError, ValueError):
    """上下兩棵樹的葉數不同"""

    def __init__(self, top_leaves: int, bottom_leaves: int):
        super().__init__(
            f"leaf count mismatch: top has {top_leaves}, bottom has {bottom_leaves}"
        )
        self.top_leaves = top_leaves
        self.bottom_leaves = bottom_leaves


class ConwaySyntaxError(ThompsonKnotsError, ValueError):
    """Conway 記號的詞法或結構錯誤"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnsupportedShapeError(ThompsonKnotsError, ValueError):
    """運算不支援此種運算式形狀"""


class UnsupportedParameterError(ThompsonKnotsError, ValueError):
    """構造參數超出定義範圍"""


class DisconnectedDiagramError(ThompsonKnotsError, ValueError):
    """圖不連通，無法走訪面"""


class DiagramFormatError(ThompsonKnotsError, ValueError):
    """PD 或 JSON 輸入格式錯誤"""


class CrossingBoundError(ThompsonKnotsError, RuntimeError):
    """交叉點數超過計算上限"""

    def __init__(self, crossings: int, bound: int):
        super().__init__(f"diagram has {crossings} crossings, bound is {bound}")
        self.crossings = crossings
        self.bound = bound


class NoEmbeddingError(ThompsonKnotsError, RuntimeError):
    """找不到兩頁（中線）排列"""

    def __init__(self, message: str, hint: Optional[str] = None):
        super().__init__(message if hint is None else f"{message}; hint: {hint}")
        self.hint = hint


class ThompsonFormError(ThompsonKnotsError, ValueError):
    """中線圖不滿足 Thompson 形式"""

    def __init__(self, message: str, vertex: int):
        super().__init__(f"{message} (vertex {vertex})")
        self.vertex = vertex

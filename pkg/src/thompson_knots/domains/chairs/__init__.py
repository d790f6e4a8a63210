"""
椅子圖領域
"""

from .entities import (ChairBlock, ChairDiagram, ChairKind, ChairOrientation,
                       ChairPlacement)

__all__ = ["ChairKind", "ChairOrientation", "ChairBlock", "ChairDiagram", "ChairPlacement"]

"""
可插拔介面定義（Ports）
"""

from .bracket import BracketPort
from .renderer import TreePairRendererPort

__all__ = ["BracketPort", "TreePairRendererPort"]

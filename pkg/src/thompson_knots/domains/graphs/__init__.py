"""
帶號圖領域
"""

from .entities import (GraphEdge, HalfEdge, MidlineArc, Side, Sign,
                       SignedMidlineGraph, SignedPlanarGraph, arcs_cross)

__all__ = [
    "Sign",
    "Side",
    "GraphEdge",
    "HalfEdge",
    "SignedPlanarGraph",
    "MidlineArc",
    "SignedMidlineGraph",
    "arcs_cross",
]

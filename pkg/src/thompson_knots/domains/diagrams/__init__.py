"""
連結圖領域
"""

from .entities import (BoundaryEnd, Crossing, GoeritzData, PlanarDiagram,
                       TangleDiagram)
from .laurent import LaurentPoly

__all__ = ["PlanarDiagram", "TangleDiagram", "BoundaryEnd", "Crossing", "GoeritzData", "LaurentPoly"]

"""
平面圖（PD code）與四端纏結

交叉以逆時針順序的四元組表示，位置 0、2 為下穿線，位置 1、3 為上穿線。
象限 i 位於位置 i 與 i+1 之間。
"""

from collections import Counter
from enum import Enum
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field, model_validator

Crossing = Tuple[int, int, int, int]


class BoundaryEnd(str, Enum):
    """纏結邊界端點，逆時針順序為 N、W、S、E"""
    N = "N"
    W = "W"
    S = "S"
    E = "E"


def _edge_counts(crossings: Tuple[Crossing, ...]) -> Counter:
    return Counter(edge for crossing in crossings for edge in crossing)


class PlanarDiagram(BaseModel):
    """封閉連結圖"""

    class Config:
        frozen = True

    crossings: Tuple[Crossing, ...] = Field(default_factory=tuple)
    loops: int = Field(0, ge=0, description="不含交叉的自由圓圈數")

    @model_validator(mode="after")
    def _check_edges(self) -> "PlanarDiagram":
        if not self.crossings and self.loops == 0:
            raise ValueError("a diagram without crossings needs at least one loop")
        for edge, count in _edge_counts(self.crossings).items():
            if count != 2:
                raise ValueError(f"edge {edge} occurs {count} times, expected 2")
        return self

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_ids(self) -> List[int]:
        return sorted(_edge_counts(self.crossings))

    def occurrences(self) -> Dict[int, List[Tuple[int, int]]]:
        """邊 → 兩個 (交叉索引, 位置)"""
        found: Dict[int, List[Tuple[int, int]]] = {}
        for index, crossing in enumerate(self.crossings):
            for position, edge in enumerate(crossing):
                found.setdefault(edge, []).append((index, position))
        return found


class TangleDiagram(BaseModel):
    """四端纏結；邊界端點計入後每個邊編號恰好出現兩次"""

    class Config:
        frozen = True

    crossings: Tuple[Crossing, ...] = Field(default_factory=tuple)
    loops: int = Field(0, ge=0)
    boundary: Dict[BoundaryEnd, int]

    @model_validator(mode="after")
    def _check_edges(self) -> "TangleDiagram":
        if set(self.boundary) != set(BoundaryEnd):
            raise ValueError("boundary must label exactly N, E, S and W")
        counts = _edge_counts(self.crossings)
        counts.update(self.boundary.values())
        for edge, count in counts.items():
            if count != 2:
                raise ValueError(f"edge {edge} occurs {count} times, expected 2")
        return self

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def end(self, label: str) -> int:
        return self.boundary[BoundaryEnd(label)]

    def __hash__(self) -> int:
        return hash((self.crossings, self.loops, tuple(sorted((k.value, v) for k, v in self.boundary.items()))))


class GoeritzData(BaseModel):
    """棋盤著色與 Goeritz 矩陣（以未著色面為索引）"""

    class Config:
        frozen = True

    faces: Tuple[Tuple[Tuple[int, int], ...], ...]
    shaded: Tuple[bool, ...]
    exterior: int
    unshaded_faces: Tuple[int, ...]
    matrix: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_matrix(self) -> "GoeritzData":
        if self.shaded[self.exterior]:
            raise ValueError("the exterior face must be unshaded")
        size = len(self.unshaded_faces)
        if len(self.matrix) != size or any(len(row) != size for row in self.matrix):
            raise ValueError("matrix must be square over the unshaded faces")
        for i in range(size):
            if sum(self.matrix[i]) != 0:
                raise ValueError("Goeritz rows must sum to zero")
            for j in range(size):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ValueError("Goeritz matrix must be symmetric")
        return self

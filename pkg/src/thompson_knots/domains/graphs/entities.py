"""
帶號平面圖與中線圖

SignedPlanarGraph 是未著色區域的 Tait 圖：每個交叉一條帶號邊，
rotation[v] 為頂點 v 周圍半邊的逆時針順序，半邊 (e, 0) 在 edges[e].u 端、
(e, 1) 在 edges[e].v 端。
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

HalfEdge = Tuple[int, int]


class Sign(str, Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    @property
    def opposite(self) -> "Sign":
        return Sign.NEGATIVE if self is Sign.POSITIVE else Sign.POSITIVE


class Side(str, Enum):
    ABOVE = "above"
    BELOW = "below"

    @property
    def opposite(self) -> "Side":
        return Side.BELOW if self is Side.ABOVE else Side.ABOVE


class GraphEdge(BaseModel):
    class Config:
        frozen = True

    u: int = Field(..., ge=0)
    v: int = Field(..., ge=0)
    sign: Sign


class SignedPlanarGraph(BaseModel):
    """帶旋轉系統的帶號平面圖，頂點 exterior 代表外部區域"""

    class Config:
        frozen = True

    vertex_count: int = Field(..., ge=1)
    exterior: int = 0
    edges: Tuple[GraphEdge, ...] = Field(default_factory=tuple)
    rotation: Tuple[Tuple[HalfEdge, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    @model_validator(mode="after")
    def _check_rotation(self) -> "SignedPlanarGraph":
        if len(self.rotation) != self.vertex_count:
            raise ValueError("rotation must list every vertex")
        if not 0 <= self.exterior < self.vertex_count:
            raise ValueError("exterior vertex out of range")
        seen = set()
        for vertex, around in enumerate(self.rotation):
            for edge_index, end in around:
                edge = self.edges[edge_index]
                if (edge.u if end == 0 else edge.v) != vertex:
                    raise ValueError(f"half-edge {(edge_index, end)} is not incident to vertex {vertex}")
                seen.add((edge_index, end))
        if len(seen) != 2 * len(self.edges) or sum(len(r) for r in self.rotation) != len(seen):
            raise ValueError("every half-edge must appear exactly once in the rotation system")
        return self

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sign_counts(self) -> Tuple[int, int]:
        positive = sum(1 for edge in self.edges if edge.sign is Sign.POSITIVE)
        return positive, len(self.edges) - positive

    def label(self, vertex: int) -> str:
        return self.labels[vertex] if self.labels else str(vertex)


class MidlineArc(BaseModel):
    class Config:
        frozen = True

    left: int = Field(..., ge=0)
    right: int = Field(..., ge=0)
    sign: Sign
    side: Side

    @model_validator(mode="after")
    def _check_order(self) -> "MidlineArc":
        if not self.left < self.right:
            raise ValueError("arc endpoints must satisfy left < right")
        return self

    @property
    def length(self) -> int:
        return self.right - self.left


def arcs_cross(first: MidlineArc, second: MidlineArc) -> bool:
    """同側兩弧交錯（端點互相穿插）"""
    a, b, c, d = first.left, first.right, second.left, second.right
    return a < c < b < d or c < a < d < b


class SignedMidlineGraph(BaseModel):
    """頂點依序排在中線上，外部頂點為位置 0"""

    class Config:
        frozen = True

    vertices: int = Field(..., ge=1)
    arcs: Tuple[MidlineArc, ...] = Field(default_factory=tuple)
    labels: Optional[Tuple[str, ...]] = None

    @model_validator(mode="after")
    def _check_planarity(self) -> "SignedMidlineGraph":
        if self.labels is not None and len(self.labels) != self.vertices:
            raise ValueError("labels must name every vertex")
        for arc in self.arcs:
            if arc.right >= self.vertices:
                raise ValueError(f"arc ({arc.left}, {arc.right}) leaves the vertex range")
        for side in Side:
            same_side = [arc for arc in self.arcs if arc.side is side]
            for i, first in enumerate(same_side):
                for second in same_side[i + 1:]:
                    if arcs_cross(first, second):
                        raise ValueError(
                            f"arcs ({first.left}, {first.right}) and ({second.left}, {second.right}) "
                            f"cross {side.value} the midline"
                        )
        return self

    def label(self, vertex: int) -> str:
        return self.labels[vertex] if self.labels else str(vertex)

    def incoming(self, vertex: int, sign: Sign) -> List[MidlineArc]:
        """從左側進入 vertex 的指定符號弧"""
        return [arc for arc in self.arcs if arc.right == vertex and arc.sign is sign]

"""
JSON 輸入輸出用的 DTO

所有 DTO 都提供 from_domain / to_domain；格式錯誤統一轉成 DiagramFormatError。
"""

import json
from typing import Dict, List, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, Field, ValidationError

from ...core.exceptions import DiagramFormatError
from ...domains.chairs.entities import ChairDiagram, ChairKind
from ...domains.diagrams.entities import (BoundaryEnd, PlanarDiagram,
                                          TangleDiagram)
from ...domains.diagrams.laurent import LaurentPoly
from ...domains.graphs.entities import (GraphEdge, MidlineArc, Side, Sign,
                                        SignedMidlineGraph, SignedPlanarGraph)
from ...domains.thompson.entities import ThompsonElement
from ...infrastructure.services.construction_service import build_chair_diagram
from ...infrastructure.services.thompson_service import element_from_codes

Model = TypeVar("Model", bound=BaseModel)


def parse_json(model: Type[Model], text: str) -> Model:
    """解析 JSON 文字；失敗時拋出 DiagramFormatError"""
    try:
        return model.model_validate_json(text)
    except ValidationError as error:
        raise DiagramFormatError(f"invalid {model.__name__} JSON: {error.errors()[0]['msg']}") from error


def dump_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json", exclude_none=True), ensure_ascii=False, indent=2) + "\n"


def _domain_error(kind: str, error: Exception) -> DiagramFormatError:
    return DiagramFormatError(f"invalid {kind}: {error}")


class ElementDTO(BaseModel):
    """樹對元素"""
    top: str = Field(..., description="上樹（值域）的前序位元字串")
    bottom: str = Field(..., description="下樹（定義域）的前序位元字串")
    leaves: Optional[int] = Field(None, description="葉數，僅供閱讀")

    class Config:
        extra = "forbid"
        json_schema_extra = {
            "example": {"top": "11100011000", "bottom": "11010010100", "leaves": 6}
        }

    @classmethod
    def from_domain(cls, element: ThompsonElement) -> "ElementDTO":
        return cls(top=element.top.code, bottom=element.bottom.code, leaves=element.leaf_count)

    def to_domain(self, reduced: bool = False) -> ThompsonElement:
        return element_from_codes(self.top, self.bottom, reduced=reduced)


class DiagramDTO(BaseModel):
    """PD code；boundary 存在時為四端纏結"""
    crossings: List[Tuple[int, int, int, int]] = Field(default_factory=list, description="逆時針四元組，位置 0、2 為下穿線")
    loops: int = Field(0, ge=0, description="自由圓圈數")
    boundary: Optional[Dict[str, int]] = Field(None, description="纏結端點 N/W/S/E 的邊編號")

    class Config:
        extra = "forbid"
        json_schema_extra = {
            "example": {"crossings": [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], "loops": 0}
        }

    @classmethod
    def from_domain(cls, diagram) -> "DiagramDTO":
        if isinstance(diagram, TangleDiagram):
            boundary = {end.value: diagram.boundary[end] for end in BoundaryEnd}
            return cls(crossings=list(diagram.crossings), loops=diagram.loops, boundary=boundary)
        return cls(crossings=list(diagram.crossings), loops=diagram.loops)

    def to_domain(self) -> PlanarDiagram:
        if self.boundary is not None:
            raise DiagramFormatError("expected a closed diagram, found a tangle")
        try:
            return PlanarDiagram(crossings=tuple(tuple(c) for c in self.crossings), loops=self.loops)
        except ValidationError as error:
            raise _domain_error("PD code", error.errors()[0]["msg"]) from error


class LaurentDTO(BaseModel):
    """A 的 Laurent 多項式，指數以字串為鍵"""
    A: Dict[str, int] = Field(default_factory=dict)

    class Config:
        json_schema_extra = {"example": {"A": {"-7": 1, "-3": -1, "5": -1}}}

    @classmethod
    def from_domain(cls, poly: LaurentPoly) -> "LaurentDTO":
        return cls(**poly.to_json())

    def to_domain(self) -> LaurentPoly:
        return LaurentPoly.from_json({"A": self.A})


class MidlineGraphDTO(BaseModel):
    """中線圖：arcs 為 [左, 右, 符號, 上下]"""
    vertices: int = Field(..., ge=1)
    arcs: List[Tuple[int, int, str, str]] = Field(default_factory=list)
    labels: Optional[List[str]] = None

    class Config:
        extra = "forbid"
        json_schema_extra = {
            "example": {"vertices": 2, "arcs": [[0, 1, "+", "above"], [0, 1, "-", "below"]]}
        }

    @classmethod
    def from_domain(cls, graph: SignedMidlineGraph) -> "MidlineGraphDTO":
        return cls(
            vertices=graph.vertices,
            arcs=[(arc.left, arc.right, arc.sign.value, arc.side.value) for arc in graph.arcs],
            labels=list(graph.labels) if graph.labels else None,
        )

    def to_domain(self) -> SignedMidlineGraph:
        try:
            arcs = tuple(
                MidlineArc(left=left, right=right, sign=Sign(sign), side=Side(side))
                for left, right, sign, side in self.arcs
            )
            return SignedMidlineGraph(
                vertices=self.vertices, arcs=arcs, labels=tuple(self.labels) if self.labels else None
            )
        except (ValidationError, ValueError) as error:
            raise _domain_error("midline graph", error) from error


class PlanarGraphDTO(BaseModel):
    """帶號平面圖：edges 為 [u, v, 符號]，rotation[v] 為半邊 [邊, 端] 的逆時針順序"""
    vertices: int = Field(..., ge=1)
    exterior: int = 0
    edges: List[Tuple[int, int, str]] = Field(default_factory=list)
    rotation: List[List[Tuple[int, int]]]
    labels: Optional[List[str]] = None

    class Config:
        extra = "forbid"
        json_schema_extra = {
            "example": {
                "vertices": 2,
                "exterior": 0,
                "edges": [[0, 1, "+"]],
                "rotation": [[[0, 0]], [[0, 1]]],
            }
        }

    @classmethod
    def from_domain(cls, graph: SignedPlanarGraph) -> "PlanarGraphDTO":
        return cls(
            vertices=graph.vertex_count,
            exterior=graph.exterior,
            edges=[(edge.u, edge.v, edge.sign.value) for edge in graph.edges],
            rotation=[list(around) for around in graph.rotation],
            labels=list(graph.labels) if graph.labels else None,
        )

    def to_domain(self) -> SignedPlanarGraph:
        try:
            return SignedPlanarGraph(
                vertex_count=self.vertices,
                exterior=self.exterior,
                edges=tuple(GraphEdge(u=u, v=v, sign=Sign(sign)) for u, v, sign in self.edges),
                rotation=tuple(tuple(tuple(h) for h in around) for around in self.rotation),
                labels=tuple(self.labels) if self.labels else None,
            )
        except (ValidationError, ValueError, IndexError) as error:
            raise _domain_error("planar graph", error) from error


class ChairDiagramDTO(BaseModel):
    """椅子圖只序列化 kind 與 spec，區塊由建構函式重新計算"""
    kind: ChairKind
    spec: List[int]
    blocks: Optional[List[int]] = Field(None, description="各區塊椅子數，僅供閱讀")

    class Config:
        extra = "forbid"
        json_schema_extra = {"example": {"kind": "product", "spec": [3, 4, 2, 5], "blocks": [2, 3, 1, 5]}}

    @classmethod
    def from_domain(cls, diagram: ChairDiagram) -> "ChairDiagramDTO":
        return cls(kind=diagram.kind, spec=list(diagram.xs), blocks=list(diagram.block_sizes))

    def to_domain(self) -> ChairDiagram:
        return build_chair_diagram(self.kind.value, self.spec)


class VerifyCaseDTO(BaseModel):
    """單一比對案例"""
    name: str
    left: List[LaurentDTO]
    right: List[LaurentDTO]
    equal: bool
    link_class: Optional[str] = Field(None, description="Jones 相等時辨識出的連結類別")
    detail: Optional[str] = None


class VerifyReportDTO(BaseModel):
    """verify 指令的報告"""
    check: str
    passed: bool
    cases: List[VerifyCaseDTO] = Field(default_factory=list)

    class Config:
        json_schema_extra = {
            "example": {
                "check": "product",
                "passed": True,
                "cases": [
                    {
                        "name": "3",
                        "left": [{"A": {"-16": -1, "-12": 1, "-4": 1}}],
                        "right": [{"A": {"-16": -1, "-12": 1, "-4": 1}}],
                        "equal": True,
                    }
                ],
            }
        }

    def summary(self) -> str:
        lines = [f"{self.check}: {'PASS' if self.passed else 'FAIL'}"]
        for case in self.cases:
            if not case.equal:
                status = "jones DIFFER"
            elif case.link_class:
                status = f"jones equal: {case.link_class} class"
            else:
                status = "jones equal"
            extra = f" ({case.detail})" if case.detail else ""
            lines.append(f"  {case.name}: {status}{extra}")
        return "\n".join(lines) + "\n"

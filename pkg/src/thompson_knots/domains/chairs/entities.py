"""
椅子圖領域實體

乘積族 T(x1…xn) 由 n 個椅子區塊組成；串接族 U(x1…xn) 由 n 層樓組成，
每層樓是一根柱子加上 xi−2 張翻轉反射椅子。
"""

from enum import Enum
from typing import Tuple

from pydantic import BaseModel, Field


class ChairKind(str, Enum):
    PRODUCT = "product"
    CONCAT = "concat"


class ChairOrientation(str, Enum):
    NORMAL = "normal"
    REFLECTED = "reflected"
    FLIPPED_REFLECTED = "flipped-reflected"


class ChairBlock(BaseModel):
    class Config:
        frozen = True

    index: int = Field(..., ge=1, description="區塊在 xs 中的位置（從 1 起算）")
    count: int = Field(..., ge=0, description="區塊內的椅子數")
    orientation: ChairOrientation
    pillar: bool = Field(False, description="串接族的每層樓帶一根柱子")


class ChairDiagram(BaseModel):
    class Config:
        frozen = True

    kind: ChairKind
    xs: Tuple[int, ...]
    blocks: Tuple[ChairBlock, ...]

    @property
    def chair_count(self) -> int:
        return sum(block.count for block in self.blocks)

    @property
    def pillar_count(self) -> int:
        return sum(1 for block in self.blocks if block.pillar)

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        return tuple(block.count for block in self.blocks)


class ChairPlacement(BaseModel):
    """展開後一張椅子在樹對中佔用的 caret（以 box 編號表示）"""

    class Config:
        frozen = True

    block: int
    position: int = Field(..., ge=1)
    top_boxes: Tuple[int, int, int]
    bottom_boxes: Tuple[int, int, int]

    def shifted(self, offset: int) -> "ChairPlacement":
        return ChairPlacement(
            block=self.block,
            position=self.position,
            top_boxes=tuple(box + offset for box in self.top_boxes),
            bottom_boxes=tuple(box + offset for box in self.bottom_boxes),
        )

    def swapped(self) -> "ChairPlacement":
        return ChairPlacement(
            block=self.block, position=self.position, top_boxes=self.bottom_boxes, bottom_boxes=self.top_boxes
        )

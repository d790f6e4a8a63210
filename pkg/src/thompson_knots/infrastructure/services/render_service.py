"""
SVG 繪圖服務：樹對與椅子圖
"""

from typing import Optional

from ...domains.chairs.entities import ChairDiagram
from ...domains.thompson.entities import ThompsonElement
from ..adapters.matplotlib_renderer import MatplotlibSvgRenderer
from ..ports.renderer import TreePairRendererPort
from .construction_service import expand_with_layout


def render_tree_pair(element: ThompsonElement, renderer: Optional[TreePairRendererPort] = None) -> str:
    renderer = renderer or MatplotlibSvgRenderer()
    return renderer.render(element)


def render_chairs(chairs: ChairDiagram, renderer: Optional[TreePairRendererPort] = None) -> str:
    """展開後的樹對，每張椅子的 caret 依所屬區塊著色"""
    renderer = renderer or MatplotlibSvgRenderer()
    layout = expand_with_layout(chairs)
    top = {}
    bottom = {}
    for placement in layout.placements:
        group = f"block {placement.block}"
        top.update({box: group for box in placement.top_boxes})
        bottom.update({box: group for box in placement.bottom_boxes})
    title = f"{chairs.kind.value} {' '.join(str(x) for x in chairs.xs)}"
    return renderer.render(layout.element, top, bottom, title=title)

"""
matplotlib SVG 繪圖適配器
"""

import io
from typing import Dict, Iterator, List, Optional, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import structlog  # noqa: E402

from ...core.config import settings  # noqa: E402
from ...domains.thompson.entities import (Node, ThompsonElement,  # noqa: E402
                                          node_leaf_count)
from ..ports.renderer import TreePairRendererPort  # noqa: E402

logger = structlog.get_logger(__name__)

Point = Tuple[float, float]

_PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
_PLAIN = "#444444"


def _segments(node: Node, offset: int = 0) -> Iterator[Tuple[int, Point, Point, Point]]:
    """每個 caret 產生 (box, 頂點, 左子頂點, 右子頂點)，y 以向上為正"""
    if node is None:
        return
    left, right = node
    left_leaves = node_leaf_count(left)
    box = offset + left_leaves

    def apex(child: Node, start: int) -> Point:
        count = node_leaf_count(child)
        return (start + (count - 1) / 2, (count - 1) / 2)

    yield (
        box,
        apex(node, offset),
        apex(left, offset),
        apex(right, box),
    )
    yield from _segments(left, offset)
    yield from _segments(right, box)


class MatplotlibSvgRenderer(TreePairRendererPort):
    """在 45° 格線上繪製樹對，輸出固定的 SVG 文字"""

    def __init__(self, cell: Optional[float] = None):
        self.cell = settings.SVG_CELL if cell is None else cell

    def _colour(self, group: Optional[str], groups: List[str]) -> str:
        if group is None:
            return _PLAIN
        return _PALETTE[groups.index(group) % len(_PALETTE)]

    def render(
        self,
        element: ThompsonElement,
        top_highlights: Optional[Dict[int, str]] = None,
        bottom_highlights: Optional[Dict[int, str]] = None,
        title: Optional[str] = None,
    ) -> str:
        top_highlights = top_highlights or {}
        bottom_highlights = bottom_highlights or {}
        groups = sorted(set(top_highlights.values()) | set(bottom_highlights.values()))
        leaves = element.leaf_count
        height = max(1.0, (leaves - 1) / 2)

        matplotlib.rcParams["svg.hashsalt"] = settings.APP_NAME
        inch = self.cell / 72
        fig, ax = plt.subplots(figsize=(max(2.0, (leaves + 1) * inch), max(2.0, (2 * height + 1) * inch)))
        try:
            for root, flip, highlights in (
                (element.top.root, 1, top_highlights),
                (element.bottom.root, -1, bottom_highlights),
            ):
                for box, apex, left, right in _segments(root):
                    colour = self._colour(highlights.get(box), groups)
                    width = 2.2 if box in highlights else 1.2
                    for child in (left, right):
                        ax.plot([apex[0], child[0]], [flip * apex[1], flip * child[1]], color=colour, linewidth=width)
            ax.plot(range(leaves), [0] * leaves, linestyle="none", marker="o", markersize=3, color="black")
            for group in groups:
                ax.plot([], [], color=self._colour(group, groups), linewidth=2.2, label=group)
            if groups:
                ax.legend(loc="upper right", fontsize=6, frameon=False)
            if title:
                ax.set_title(title, fontsize=9)
            ax.set_xlim(-0.5, leaves - 0.5)
            ax.set_ylim(-height - 0.5, height + 0.5)
            ax.set_aspect("equal")
            ax.set_axis_off()

            buffer = io.StringIO()
            fig.savefig(buffer, format="svg", metadata={"Date": None}, bbox_inches="tight")
        finally:
            plt.close(fig)

        logger.debug("Tree pair rendered", leaves=leaves, highlighted=len(top_highlights) + len(bottom_highlights))
        return buffer.getvalue()

"""
bracket 引擎與繪圖適配器模組
"""

from typing import Dict, Optional, Type

from ...core.config import settings
from ..ports.bracket import BracketPort
from .frontier_bracket import FrontierBracketAdapter
from .matplotlib_renderer import MatplotlibSvgRenderer
from .state_sum_bracket import StateSumBracketAdapter


class BracketAdapterFactory:
    """bracket 引擎工廠"""

    _adapters: Dict[str, Type[BracketPort]] = {
        "frontier": FrontierBracketAdapter,
        "state_sum": StateSumBracketAdapter,
    }

    @classmethod
    def create_adapter(cls, engine: Optional[str] = None, **kwargs) -> BracketPort:
        """建立 bracket 引擎；未指定時使用 settings.BRACKET_ENGINE"""
        name = engine or settings.BRACKET_ENGINE
        if name not in cls._adapters:
            raise ValueError(f"Unsupported bracket engine: {name}")
        return cls._adapters[name](**kwargs)

    @classmethod
    def get_available_engines(cls) -> list:
        return list(cls._adapters)


__all__ = ["BracketAdapterFactory", "FrontierBracketAdapter", "MatplotlibSvgRenderer", "StateSumBracketAdapter"]

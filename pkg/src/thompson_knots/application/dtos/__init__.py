"""
應用層資料傳輸物件
"""

from .knot_dtos import (ChairDiagramDTO, DiagramDTO, ElementDTO, LaurentDTO,
                        MidlineGraphDTO, PlanarGraphDTO, VerifyCaseDTO,
                        VerifyReportDTO, dump_json, parse_json)

__all__ = [
    "ChairDiagramDTO",
    "DiagramDTO",
    "ElementDTO",
    "LaurentDTO",
    "MidlineGraphDTO",
    "PlanarGraphDTO",
    "VerifyCaseDTO",
    "VerifyReportDTO",
    "dump_json",
    "parse_json",
]

"""
基礎設施服務模組
"""

from .construction_service import (build_concat_diagram, build_product_diagram,
                                   expand, expand_with_layout)
from .conway_parser import parse_conway, print_conway, rational_fraction
from .invariant_service import (goeritz_determinant, jones_set,
                                kauffman_bracket, writhe)
from .jones_map import psi, psi_prime
from .midline_layout import linearize, normalize
from .planar_diagram import build_conway, closure, gauss_code
from .reverse_pipeline import (element_to_graph, extract_signed_graph,
                               graph_to_element, is_thompson_form, reverse)
from .thompson_service import compose, element_from_codes, inverse, reduce

__all__ = [
    "build_concat_diagram",
    "build_conway",
    "build_product_diagram",
    "closure",
    "compose",
    "element_from_codes",
    "element_to_graph",
    "expand",
    "expand_with_layout",
    "extract_signed_graph",
    "gauss_code",
    "goeritz_determinant",
    "graph_to_element",
    "inverse",
    "is_thompson_form",
    "jones_set",
    "kauffman_bracket",
    "linearize",
    "normalize",
    "parse_conway",
    "print_conway",
    "psi",
    "psi_prime",
    "rational_fraction",
    "reduce",
    "reverse",
    "writhe",
]

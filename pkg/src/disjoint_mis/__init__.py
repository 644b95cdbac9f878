"""Exact analysis of maximum independent sets: disjoint-pair decisions with
certificates, shedding vertices, matchings and special graph families."""

from .errors import CapExceeded, GraphError, ParseError, PreconditionError, StrategyMismatch
from .families import decide, unicyclic_two_disjoint_mis
from .graph import Graph, parse_graph, parse_graph6, to_graph6
from .independence import (
    Certificate,
    alpha,
    has_two_disjoint_mis,
    omega_family,
    validate_certificate,
)
from .matching import Matching, matching_number
from .vertex_classes import classify, shedding_vertices

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Certificate",
    "Graph",
    "GraphError",
    "Matching",
    "ParseError",
    "PreconditionError",
    "StrategyMismatch",
    "alpha",
    "classify",
    "decide",
    "has_two_disjoint_mis",
    "matching_number",
    "omega_family",
    "parse_graph",
    "parse_graph6",
    "shedding_vertices",
    "to_graph6",
    "unicyclic_two_disjoint_mis",
    "validate_certificate",
]

"""Exact H-coloring toolkit for small multigraphs.

Includes the cubic graph G* that has a perfect matching but no S10- or
S12-coloring.
"""
from .catalog import NAMES, NamedGraph, build_g_star, named, two_circuit_edges
from .hcolor import (
    COLORABLE,
    NOT_COLORABLE,
    RESOURCE_LIMIT,
    EdgeMapping,
    SolveOptions,
    SolveOutcome,
    check_observation1,
    class1_lift,
    compose,
    enumerate_colorings,
    induced_vertex_map,
    solve,
    verify,
)
from .multigraph import MultiGraph, build

__version__ = "0.1.0"

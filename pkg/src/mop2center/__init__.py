"""Exact-by-splitting 2-center of maximal outerplanar graphs."""
from .eccentricity import EdgeSideTable, edge_eccentricities, one_center, vertex_eccentricities
from .generator import GenSpec, family_mop, random_mop
from .mop import (
    DualTree,
    EdgeSide,
    Mop,
    MopError,
    dual_tree,
    induced_sub_mop,
    mop_from_edges,
    mop_from_json,
    sides_of_edge,
    validate_mop,
)
from .oracle import (
    OracleResult,
    apsp,
    brute_force_one_center,
    brute_force_two_center,
    enumerate_triangulations,
    verify_solution,
)
from .two_center import TwoCenterSolution, assign_cover_sets, candidate_radius, two_center

__version__ = "0.1.0"

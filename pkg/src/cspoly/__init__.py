"""Exact combinatorics of centrally symmetric polytopes.

Vertex descriptions over the rationals, facet and face-lattice enumeration,
flag vectors, Hanner polytopes and the stress spaces of 2-skeleton
frameworks.
"""

from __future__ import annotations

from .constructors import (bipyramid, central_hypersimplex, crosspolytope, cube, direct_sum,
                           hansen, hypersimplex, interval, prism, product, pyramid, simplex,
                           slab, twisted_prism)
from .exact import RatMatrix, nullspace, rank, rat
from .expr import build, parse
from .flags import (ALPHA, L1, L2, FlagVector, Functional, evaluate_functional, f_polynomial,
                    flag_vector, g2_toric, identities_and_inequalities, s_value)
from .hanner import HannerExpr, conjecture_report, enumerate_hanner, parse_hanner, realize
from .isomorphism import IsomorphismInconclusive, lattice_isomorphic
from .polytope import (FaceLattice, VPolytope, combinatorial_dual, convex_hull, face_lattice,
                       facet_enumeration, is_centrally_symmetric)
from .rigidity import stress_analysis, triangulate_2_skeleton

__version__ = "0.1.0"

__all__ = [
    "ALPHA", "FaceLattice", "FlagVector", "Functional", "HannerExpr", "IsomorphismInconclusive",
    "L1", "L2", "RatMatrix", "VPolytope", "bipyramid", "build", "central_hypersimplex",
    "combinatorial_dual", "conjecture_report", "convex_hull", "crosspolytope", "cube",
    "direct_sum", "enumerate_hanner", "evaluate_functional", "f_polynomial", "face_lattice",
    "facet_enumeration", "flag_vector", "g2_toric", "hansen", "hypersimplex",
    "identities_and_inequalities", "interval", "is_centrally_symmetric", "lattice_isomorphic",
    "nullspace", "parse", "parse_hanner", "prism", "product", "pyramid", "rank", "rat",
    "realize", "s_value", "simplex", "slab", "stress_analysis", "triangulate_2_skeleton",
    "twisted_prism",
]

"""Named centrally symmetric instances used by the verification harness."""

from __future__ import annotations

from functools import cache

from .expr import build
from .hanner import enumerate_hanner
from .polytope import VPolytope

P4_EXPR = "slab(cube(4); 1 1 1 1; -2; 2)"

NAMED = {
    "C3": "cube(3)",
    "C4": "cube(4)",
    "C5": "cube(5)",
    "C6": "cube(6)",
    "C3dual": "cross(3)",
    "C4dual": "cross(4)",
    "C5dual": "cross(5)",
    "C6dual": "cross(6)",
    "bipC3": "bip(cube(3))",
    "prismC3dual": "prism(cross(3))",
    "P4": P4_EXPR,
    "HS2": "chyper(2)",
    "HS3": "chyper(3)",
    "prismHS3": "prism(chyper(3))",
    "HG4": "hansen(path(4))",
    "HG5": "hansen(g5())",
    "tprism_pyr_square": "tprism(pyr(cube(2)))",
    "bip_tprism_square": "bip(tprism(cube(2)))",
    "tprism_pyr_triangle": "tprism(pyr(simplex(2)))",
    "bip_tprism_triangle": "bip(tprism(simplex(2)))",
    "HG_empty3": "hansen(empty(3))",
    "slab_cube3": "slab(cube(3); 1 1 1; -1; 1)",
}


@cache
def named(name: str) -> VPolytope:
    return build(NAMED[name])


@cache
def hanner_instances(max_d: int = 5) -> dict[str, VPolytope]:
    return {f"hanner({e})": build(f"hanner({e})")
            for d in range(3, max_d + 1) for e in enumerate_hanner(d).exprs()}


def cs_corpus(max_hanner_d: int = 5) -> dict[str, VPolytope]:
    """Every named instance plus Hanner realizations of dimension 3..max_hanner_d."""
    out = {name: named(name) for name in NAMED}
    out.update(hanner_instances(max_hanner_d))
    return out

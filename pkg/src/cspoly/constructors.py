"""Constructions of the polytope families used throughout the package."""

from __future__ import annotations

import warnings
from fractions import Fraction
from itertools import combinations, product as cartesian
from typing import Sequence

from .exact import DimensionError, dot, rat, vec
from .graphs import Graph, berge_check
from .polytope import VPolytope, bits, convex_hull


class NonBergeWarning(UserWarning):
    """Hansen construction on a graph that is not perfect."""


class SlabContainsPolytopeWarning(UserWarning):
    pass


def _require_dim(d: int) -> None:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")


def cube(d: int) -> VPolytope:
    _require_dim(d)
    return VPolytope.from_points(cartesian((-1, 1), repeat=d))


def crosspolytope(d: int) -> VPolytope:
    _require_dim(d)
    pts = []
    for i in range(d):
        for s in (-1, 1):
            v = [0] * d
            v[i] = s
            pts.append(v)
    return VPolytope.from_points(pts)


def interval() -> VPolytope:
    return cube(1)


def simplex(d: int) -> VPolytope:
    """conv(0, e_1, ..., e_d)."""
    _require_dim(d)
    pts = [[0] * d] + [[int(i == j) for j in range(d)] for i in range(d)]
    return VPolytope.from_points(pts)


def centered_simplex(d: int) -> VPolytope:
    """conv(e_1, ..., e_d, -(e_1 + ... + e_d)); the origin is interior."""
    _require_dim(d)
    pts = [[int(i == j) for j in range(d)] for i in range(d)] + [[-1] * d]
    return VPolytope.from_points(pts)


def _full(p: VPolytope, what: str) -> None:
    if not p.is_full_dimensional:
        raise DimensionError(f"{what} needs a full-dimensional polytope")


def _origin_interior(p: VPolytope) -> bool:
    return all(a0 > 0 for _, a0 in p.incidence.facet_normals)


def product(p: VPolytope, q: VPolytope) -> VPolytope:
    _full(p, "product")
    _full(q, "product")
    return VPolytope.from_points(u + v for u in p.vertices for v in q.vertices)


def direct_sum(p: VPolytope, q: VPolytope) -> VPolytope:
    _full(p, "direct sum")
    _full(q, "direct sum")
    for x in (p, q):
        if not _origin_interior(x):
            raise DimensionError("direct sum needs the origin in the interior of both summands")
    zq = (Fraction(0),) * q.ambient_dim
    zp = (Fraction(0),) * p.ambient_dim
    return VPolytope.from_points([u + zq for u in p.vertices] + [zp + v for v in q.vertices])


def _centroid(p: VPolytope) -> tuple:
    n = p.n_vertices
    return tuple(sum(v[i] for v in p.vertices) / n for i in range(p.ambient_dim))


def pyramid(p: VPolytope) -> VPolytope:
    _full(p, "pyramid")
    zero = (Fraction(0),)
    apex = (Fraction(0),) * p.ambient_dim + (Fraction(1),)
    return VPolytope.from_points([v + zero for v in p.vertices] + [apex])


def bipyramid(p: VPolytope) -> VPolytope:
    """Apexes at height +-1 over the vertex centroid (the origin for cs input)."""
    _full(p, "bipyramid")
    c = _centroid(p)
    zero = (Fraction(0),)
    pts = [v + zero for v in p.vertices]
    pts += [c + (Fraction(1),), c + (Fraction(-1),)]
    return VPolytope.from_points(pts)


def prism(p: VPolytope) -> VPolytope:
    return product(interval(), p)


def twisted_prism(q: VPolytope) -> VPolytope:
    """conv(q x {1} and -q x {-1})."""
    _full(q, "twisted prism")
    one, mone = (Fraction(1),), (Fraction(-1),)
    pts = [v + one for v in q.vertices] + [tuple(-x for x in v) + mone for v in q.vertices]
    return VPolytope.from_points(pts)


def hypersimplex(k: int, d: int) -> VPolytope:
    """0/1 vectors of length d with exactly k ones; a (d-1)-polytope in R^d."""
    if not 0 < k < d:
        raise ValueError(f"hypersimplex needs 0 < k < d, got k={k}, d={d}")
    pts = []
    for ones in combinations(range(d), k):
        pts.append([int(i in ones) for i in range(d)])
    return VPolytope.from_points(pts)


def central_hypersimplex(k: int) -> VPolytope:
    """Delta(k, 2k) realized full-dimensionally and centred:
    the +-1 vectors of length 2k-1 with coordinate sum +-1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    d = 2 * k - 1
    return VPolytope.from_points(v for v in cartesian((-1, 1), repeat=d) if abs(sum(v)) <= 1)


def slab(p: VPolytope, a: Sequence, lo, hi) -> VPolytope:
    """Exact V-description of ``p`` intersected with ``{lo <= <a,x> <= hi}``.

    New vertices are the crossings of edges of ``p`` with the two bounding
    hyperplanes.
    """
    _full(p, "slab")
    a = vec(a)
    lo, hi = rat(lo), rat(hi)
    if len(a) != p.ambient_dim:
        raise DimensionError("normal vector length differs from the ambient dimension")
    if not lo < hi:
        raise ValueError("slab needs lo < hi")
    vals = [dot(a, v) for v in p.vertices]
    if all(lo <= x <= hi for x in vals):
        warnings.warn("slab contains the whole polytope", SlabContainsPolytopeWarning,
                      stacklevel=2)
        return p
    pts = [v for v, x in zip(p.vertices, vals) if lo <= x <= hi]
    for edge in p.lattice.layer(1):
        i, j = bits(edge)
        for c in (lo, hi):
            xi, xj = vals[i] - c, vals[j] - c
            if xi * xj < 0:
                t = xi / (xi - xj)
                u, w = p.vertices[i], p.vertices[j]
                pts.append(tuple(s + t * (r - s) for s, r in zip(u, w)))
    if not pts:
        raise ValueError("slab does not meet the polytope")
    out = convex_hull(pts)
    if out.intrinsic_dim < p.intrinsic_dim:
        raise DimensionError("slab intersection is lower-dimensional")
    return out


def characteristic_vector(s, n: int) -> tuple:
    return tuple(1 if i in s else -1 for i in range(n))


def independence_polytope(g: Graph) -> VPolytope:
    return VPolytope.from_points(characteristic_vector(s, g.n) for s in g.independent_sets())


def hansen(g: Graph) -> VPolytope:
    """Twisted prism over the hull of +-1 characteristic vectors of independent sets."""
    if g.n < 1:
        raise ValueError("Hansen polytope needs at least one graph vertex")
    report = berge_check(g)
    if not report.is_berge:
        warnings.warn(f"graph is not Berge (odd holes {report.holes}, "
                      f"odd antiholes {report.antiholes})", NonBergeWarning, stacklevel=2)
    return twisted_prism(independence_polytope(g))

"""Vertex-described polytopes, facet enumeration and face lattices.

Facets are found with the double description method on the cone of valid
inequalities ``{(a0, a) : <a, v> <= a0 for all vertices v}``; its extreme
rays are exactly the facet inequalities when the polytope is
full-dimensional.  All arithmetic is on Python integers.

Vertex sets of faces are stored as int bitmasks (bit ``i`` = vertex ``i``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence

from .exact import (
    DimensionError,
    RatVector,
    affine_dim,
    affine_hull_coordinates,
    rank,
    rref,
    RatMatrix,
    vec,
)

MAX_VERTICES = 200
MAX_DIM = 12


class NotAVertexError(ValueError):
    """A listed point lies in the convex hull of the others."""


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class IncidenceStructure:
    n_vertices: int
    dim: int
    facets: tuple  # tuple[int, ...] of vertex bitmasks
    facet_normals: tuple  # tuple[(tuple[int, ...], int), ...]

    def facet_sets(self) -> list[frozenset[int]]:
        return [frozenset(bits(f)) for f in self.facets]

    def vertex_facets(self, v: int) -> list[int]:
        return [j for j, f in enumerate(self.facets) if f >> v & 1]


@dataclass(frozen=True)
class VPolytope:
    """A polytope given by its (canonically ordered) vertex list."""

    vertices: tuple  # tuple[RatVector, ...], lexicographically sorted
    ambient_dim: int
    intrinsic_dim: int

    @classmethod
    def from_points(cls, points: Iterable[Sequence], check: bool = True) -> VPolytope:
        """Build from points that must all be vertices.

        With ``check`` the vertex-minimality is verified (raising
        :class:`NotAVertexError`); use :func:`convex_hull` to prune instead.
        """
        p = cls._raw(points)
        if check and p.intrinsic_dim >= 1:
            bad = _non_vertices(p.vertices, p.incidence)
            if bad:
                raise NotAVertexError(
                    f"points {[p.vertices[i] for i in bad][:3]} are not vertices")
        return p

    @classmethod
    def _raw(cls, points: Iterable[Sequence]) -> VPolytope:
        pts = sorted(set(vec(p) for p in points))
        if not pts:
            raise DimensionError("no points")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise DimensionError("points of different lengths")
        if len(pts) > MAX_VERTICES or n > MAX_DIM:
            raise DimensionError(
                f"{len(pts)} points in dimension {n} is beyond desk scale")
        return cls(tuple(pts), n, affine_dim(pts))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        return self.intrinsic_dim

    @property
    def is_full_dimensional(self) -> bool:
        return self.intrinsic_dim == self.ambient_dim

    @cached_property
    def incidence(self) -> IncidenceStructure:
        return facet_enumeration(self)

    @cached_property
    def lattice(self) -> FaceLattice:
        return face_lattice(self.incidence)

    def index(self, point: Sequence) -> int:
        return self.vertices.index(vec(point))

    def negated(self) -> VPolytope:
        return VPolytope.from_points([tuple(-x for x in v) for v in self.vertices], check=False)


def convex_hull(points: Iterable[Sequence]) -> VPolytope:
    """The polytope spanned by ``points``, dropping non-vertices."""
    p = VPolytope._raw(points)
    if p.intrinsic_dim == 0:
        return p
    inc = p.incidence
    bad = set(_non_vertices(p.vertices, inc))
    if not bad:
        return p
    keep = [i for i in range(p.n_vertices) if i not in bad]
    q = VPolytope(tuple(p.vertices[i] for i in keep), p.ambient_dim, p.intrinsic_dim)
    remap = {old: new for new, old in enumerate(keep)}
    facets = [mask_of(remap[i] for i in bits(f) if i in remap) for f in inc.facets]
    q.__dict__["incidence"] = _sorted_incidence(len(keep), inc.dim, facets, inc.facet_normals)
    return q


def _non_vertices(vertices, inc: IncidenceStructure) -> list[int]:
    bad = []
    for v in range(len(vertices)):
        normals = [inc.facet_normals[j][0] for j in inc.vertex_facets(v)]
        if len(normals) < inc.dim or rank(normals) < inc.dim:
            bad.append(v)
    return bad


def _integer_point(v: Sequence[Fraction]) -> tuple[int, list[int]]:
    den = reduce(lcm, (x.denominator for x in v), 1)
    return den, [int(x * den) for x in v]


def _primitive_int(v: list[int]) -> tuple[int, ...]:
    g = gcd(*v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _initial_basis(rows: list[list[int]], width: int) -> list[int]:
    chosen: list[int] = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in chosen] + [r]) > len(chosen):
            chosen.append(i)
            if len(chosen) == width:
                break
    return chosen


def _inverse_columns(rows: list[list[int]]) -> list[list[int]]:
    n = len(rows)
    aug = RatMatrix.from_rows([r + [int(i == j) for j in range(n)] for i, r in enumerate(rows)])
    reduced, _ = rref(aug)
    inv = [row[n:] for row in reduced]
    cols = []
    for j in range(n):
        col = [inv[i][j] for i in range(n)]
        den = reduce(lcm, (x.denominator for x in col), 1)
        cols.append([int(x * den) for x in col])
    return cols


def extreme_rays(rows: list[list[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Extreme rays of the pointed cone ``{y : rows @ y >= 0}``.

    Returns (primitive ray, bitmask of rows tight at the ray).  The rows must
    have full column rank.
    """
    width = len(rows[0])
    basis = _initial_basis(rows, width)
    if len(basis) < width:
        raise DimensionError("constraint matrix is not of full column rank")

    def zeros_of(r, indices):
        m = 0
        for i in indices:
            if sum(a * b for a, b in zip(rows[i], r)) == 0:
                m |= 1 << i
        return m

    rays = []
    for col in _inverse_columns([rows[i] for i in basis]):
        r = _primitive_int(col)
        rays.append((r, zeros_of(r, basis)))

    in_basis = set(basis)
    for h in (i for i in range(len(rows)) if i not in in_basis):
        row = rows[h]
        pos, neg, zero = [], [], []
        for r, z in rays:
            s = sum(a * b for a, b in zip(row, r))
            (pos if s > 0 else neg if s < 0 else zero).append((r, z, s))
        if not neg:
            rays = [(r, z | (1 << h) if s == 0 else z) for r, z, s in pos + zero]
            continue
        hbit = 1 << h
        masks = [z for _, z in rays]
        new = []
        for rp, zp, sp in pos:
            for rn, zn, sn in neg:
                common = zp & zn
                if popcount(common) < width - 2:
                    continue
                if any(m & common == common and m != zp and m != zn for m in masks):
                    continue
                combo = [sp * b - sn * a for a, b in zip(rp, rn)]
                new.append((_primitive_int(combo), common | hbit))
        rays = [(r, z) for r, z, _ in pos] + [(r, z | hbit) for r, z, _ in zero] + new
    return rays


def _sorted_incidence(n, dim, facets, normals) -> IncidenceStructure:
    order = sorted(range(len(facets)), key=lambda j: sorted(bits(facets[j])))
    return IncidenceStructure(n, dim, tuple(facets[j] for j in order),
                              tuple(normals[j] for j in order))


def facet_enumeration(p: VPolytope) -> IncidenceStructure:
    """All facets of ``p`` with exact supporting hyperplanes.

    Each normal is ``(a, a0)`` with integer entries of joint content 1 and
    ``<a, v> <= a0`` for every vertex, equality exactly on the facet.  For a
    polytope that is not full-dimensional, ``a`` is supported on a set of
    coordinates on which the projection of the affine hull is injective.
    """
    d = p.intrinsic_dim
    if d < 1 or p.n_vertices < d + 1:
        raise DimensionError("facet enumeration needs a polytope of dimension >= 1")
    coords = affine_hull_coordinates(p.vertices)
    rows = []
    for v in p.vertices:
        den, iv = _integer_point([v[c] for c in coords])
        rows.append([den] + [-x for x in iv])
    facets, normals = [], []
    for ray, zmask in extreme_rays(rows):
        a0, a = ray[0], ray[1:]
        full = [0] * p.ambient_dim
        for c, x in zip(coords, a):
            full[c] = x
        facets.append(zmask)
        normals.append((tuple(full), a0))
    inc = _sorted_incidence(p.n_vertices, d, facets, normals)
    if len(set(inc.facets)) != len(inc.facets):
        raise AssertionError("duplicate facets from double description")
    return inc


@dataclass(frozen=True)
class FaceLattice:
    """Graded poset of faces, each a vertex bitmask with its dimension.

    Includes the empty face (dim -1) and the polytope itself (dim d).
    ``covers[k]`` lists the indices of the faces covered by face ``k``.
    """

    d: int
    n_vertices: int
    faces: tuple  # tuple[(mask, dim), ...] sorted by (dim, vertex list)
    covers: tuple  # tuple[tuple[int, ...], ...]

    @cached_property
    def index(self) -> dict[int, int]:
        return {m: k for k, (m, _) in enumerate(self.faces)}

    def layer(self, i: int) -> list[int]:
        return [m for m, dim in self.faces if dim == i]

    @property
    def facets(self) -> list[int]:
        return self.layer(self.d - 1)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * self.d
        for _, dim in self.faces:
            if 0 <= dim < self.d:
                counts[dim] += 1
        return tuple(counts)

    def face_sets(self) -> list[tuple[frozenset[int], int]]:
        return [(frozenset(bits(m)), dim) for m, dim in self.faces]

    def to_json(self) -> list[dict]:
        return [{"vertices": sorted(bits(m)), "dim": dim} for m, dim in self.faces]


def _build_lattice(d: int, n: int, facets: Sequence[int]) -> FaceLattice:
    full = (1 << n) - 1
    dims: dict[int, int] = {full: d}
    cover: dict[int, set[int]] = {full: set(facets)}
    level = set(facets)
    for f in level:
        dims[f] = d - 1
    for k in range(d - 1, -1, -1):
        nxt: set[int] = set()
        for face in level:
            cands = {face & g for g in facets} - {face}
            maximal = [c for c in cands
                       if not any(o != c and o & c == c for o in cands)]
            cover[face] = set(maximal)
            nxt.update(maximal)
        for f in nxt:
            dims[f] = k - 1
        level = nxt
    cover[0] = set()
    if level != {0}:
        raise AssertionError("face lattice did not close at the empty face")
    ordered = sorted(dims, key=lambda m: (dims[m], sorted(bits(m))))
    idx = {m: k for k, m in enumerate(ordered)}
    covers = tuple(tuple(sorted(idx[c] for c in cover[m])) for m in ordered)
    return FaceLattice(d, n, tuple((m, dims[m]) for m in ordered), covers)


def face_lattice(inc: IncidenceStructure) -> FaceLattice:
    """All faces as intersections of facets, graded level by level.

    The faces covered by a face F are the maximal proper sets among
    ``F & G`` over facets G; the empty face closes the recursion.
    """
    return _build_lattice(inc.dim, inc.n_vertices, inc.facets)


def combinatorial_dual(lat: FaceLattice) -> FaceLattice:
    """Order-reversed lattice; dual vertices are the primal facets."""
    facets = lat.facets
    n = len(facets)
    # dual facet for each primal vertex: the set of primal facets containing it
    dual_facets = [mask_of(j for j, f in enumerate(facets) if f >> v & 1)
                   for v in range(lat.n_vertices)]
    return _build_lattice(lat.d, n, dual_facets)


@dataclass(frozen=True)
class CsCertificate:
    pairing: tuple[int, ...]

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.pairing) if i < j]


def is_centrally_symmetric(p: VPolytope) -> CsCertificate | None:
    lookup = {v: i for i, v in enumerate(p.vertices)}
    pairing = []
    for i, v in enumerate(p.vertices):
        j = lookup.get(tuple(-x for x in v))
        if j is None or j == i:
            return None
        pairing.append(j)
    return CsCertificate(tuple(pairing))


def antipodal_face(mask: int, cert: CsCertificate) -> int:
    return mask_of(cert.pairing[i] for i in bits(mask))


def full_dimensional(p: VPolytope) -> VPolytope:
    """Affinely isomorphic copy of ``p`` in R^dim, by coordinate projection."""
    if p.is_full_dimensional:
        return p
    coords = affine_hull_coordinates(p.vertices)
    return VPolytope.from_points([tuple(v[c] for c in coords) for v in p.vertices])

"""Bar-joint frameworks on triangulated 2-skeletons, and their stresses.

The rigidity matrix drops the factor 2 of the derivative of squared edge
lengths; ranks and kernels are unaffected and entries stay integral for
integral coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .exact import RatMatrix, nullspace, rank, vec
from .polytope import FaceLattice, bits, mask_of


class RigidityError(ValueError):
    pass


@dataclass(frozen=True)
class Framework:
    d: int
    coords: tuple  # tuple[RatVector, ...]
    edges: tuple  # sorted tuple of (u, v) with u < v
    symmetry: tuple | None = None  # joint pairing v -> antipode

    def __post_init__(self):
        if len(self.coords) < self.d + 1:
            raise RigidityError("a framework needs at least d+1 joints")
        if self.symmetry is not None:
            pair = self.symmetry
            for v, w in enumerate(pair):
                if w == v or pair[w] != v:
                    raise RigidityError("joint pairing is not a fixed-point-free involution")
                if self.coords[w] != tuple(-x for x in self.coords[v]):
                    raise RigidityError(f"joints {v} and {w} are not antipodal")
            es = set(self.edges)
            for e in self.edges:
                if self.negate_edge(e) not in es:
                    raise RigidityError(f"edge {e} has no antipodal partner")

    @property
    def n_joints(self) -> int:
        return len(self.coords)

    def negate_edge(self, e: tuple[int, int]) -> tuple[int, int]:
        a, b = self.symmetry[e[0]], self.symmetry[e[1]]
        return (min(a, b), max(a, b))

    def to_json(self) -> dict:
        return {"d": self.d,
                "joints": [[str(x) for x in p] for p in self.coords],
                "edges": [list(e) for e in self.edges],
                "pairing": None if self.symmetry is None else list(self.symmetry)}


def _fan_chords(face: int, edges: set[tuple[int, int]], root_rank: int) -> list[tuple[int, int]]:
    verts = sorted(bits(face))
    root = verts[root_rank]
    ring = {v for v in verts if (min(root, v), max(root, v)) in edges}
    return [(min(root, w), max(root, w)) for w in verts if w != root and w not in ring]


def triangulate_2_skeleton(lat: FaceLattice, coords: Sequence, symmetric: bool = False,
                           root_rank: int = 0) -> Framework:
    """Edges of the polytope plus a fan of chords in every 2-face.

    The fan of a 2-face is rooted at its ``root_rank``-th vertex in index
    (lexicographic) order.  In symmetric mode one face per antipodal pair is
    fanned and the chords are carried over to the opposite face by negation.
    """
    if lat.d < 3:
        raise RigidityError("the 2-skeleton framework needs a polytope of dimension >= 3")
    coords = tuple(vec(c) for c in coords)
    edges = {tuple(sorted(bits(m))) for m in lat.layer(1)}
    pairing = None
    if symmetric:
        lookup = {p: i for i, p in enumerate(coords)}
        try:
            pairing = tuple(lookup[tuple(-x for x in p)] for p in coords)
        except KeyError:
            raise RigidityError("symmetric mode needs a centrally symmetric vertex set") from None
    chords: set[tuple[int, int]] = set()
    done: set[int] = set()
    for face in lat.layer(2):
        if face in done:
            continue
        if pairing is None:
            chords.update(_fan_chords(face, edges, root_rank))
            done.add(face)
            continue
        opposite = mask_of(pairing[v] for v in bits(face))
        rep = min(face, opposite, key=lambda m: sorted(bits(m)))
        fan = _fan_chords(rep, edges, root_rank)
        chords.update(fan)
        chords.update((min(pairing[u], pairing[v]), max(pairing[u], pairing[v])) for u, v in fan)
        done.update((face, opposite))
    return Framework(len(coords[0]), coords, tuple(sorted(edges | chords)), pairing)


def rigidity_matrix(fw: Framework) -> RatMatrix:
    d, n = fw.d, fw.n_joints
    rows = []
    for u, v in fw.edges:
        row = [Fraction(0)] * (d * n)
        for k in range(d):
            diff = fw.coords[u][k] - fw.coords[v][k]
            row[d * u + k] = diff
            row[d * v + k] = -diff
        rows.append(row)
    return RatMatrix.from_rows(rows, d * n)


def folded_symmetric_matrix(fw: Framework) -> RatMatrix:
    """R1 - R2: rows are representative edges, columns representative joints."""
    if fw.symmetry is None:
        raise RigidityError("framework carries no symmetry")
    d, pair = fw.d, fw.symmetry
    reps = [v for v in range(fw.n_joints) if v < pair[v]]
    col = {v: i for i, v in enumerate(reps)}
    edge_reps = sorted({min(e, fw.negate_edge(e)) for e in fw.edges})
    rows = []
    for u, v in edge_reps:
        row = [Fraction(0)] * (d * len(reps))
        for a, b in ((u, v), (v, u)):
            sign, j = (1, a) if a in col else (-1, pair[a])
            for k in range(d):
                row[d * col[j] + k] += sign * (fw.coords[a][k] - fw.coords[b][k])
        rows.append(row)
    return RatMatrix.from_rows(rows, d * len(reps))


@dataclass(frozen=True)
class StressReport:
    e: int
    v: int
    d: int
    rank_R: int
    stress_dim: int
    sym_stress_dim: int | None = None
    sym_lower_bound: Fraction | None = None
    g2_predicted: Fraction | None = None
    jacobian_factor_dropped: int = 2

    @property
    def rigid(self) -> bool:
        return self.rank_R == self.d * self.v - comb(self.d + 1, 2)

    @property
    def matches_g2(self) -> bool | None:
        return None if self.g2_predicted is None else self.stress_dim == self.g2_predicted

    @property
    def sym_bound_holds(self) -> bool | None:
        if self.sym_stress_dim is None:
            return None
        return self.sym_stress_dim >= self.sym_lower_bound and self.sym_stress_dim <= self.stress_dim

    def to_json(self) -> dict:
        return {"e": self.e, "v": self.v, "d": self.d, "rank_R": self.rank_R,
                "stress_dim": self.stress_dim, "infinitesimally_rigid": self.rigid,
                "sym_stress_dim": self.sym_stress_dim,
                "sym_lower_bound": None if self.sym_lower_bound is None else str(self.sym_lower_bound),
                "sym_bound_holds": self.sym_bound_holds,
                "g2_predicted": None if self.g2_predicted is None else str(self.g2_predicted),
                "matches_g2": self.matches_g2,
                "jacobian_factor_dropped": self.jacobian_factor_dropped}


def stress_analysis(fw: Framework, g2_predicted=None) -> StressReport:
    e, v, d = len(fw.edges), fw.n_joints, fw.d
    r = rank(rigidity_matrix(fw))
    sym_dim = bound = None
    if fw.symmetry is not None:
        if e % 2 or v % 2:
            raise RigidityError("odd edge or joint count in a symmetric framework")
        sym_dim = e // 2 - rank(folded_symmetric_matrix(fw))
        bound = Fraction(e, 2) - Fraction(d * v, 2) + comb(d, 2)
    return StressReport(e, v, d, r, e - r, sym_dim, bound,
                        None if g2_predicted is None else Fraction(g2_predicted))


def stress_basis(fw: Framework) -> list[tuple]:
    """Basis of the stress space, the left kernel of the rigidity matrix."""
    return nullspace(rigidity_matrix(fw).transpose())


def in_equilibrium(fw: Framework, omega: Sequence) -> bool:
    """Check sum over neighbours u of w_uv (p_v - p_u) = 0 at every joint v."""
    force = [[Fraction(0)] * fw.d for _ in range(fw.n_joints)]
    for w, (a, b) in zip(omega, fw.edges):
        for k in range(fw.d):
            delta = fw.coords[b][k] - fw.coords[a][k]
            force[b][k] += w * delta
            force[a][k] -= w * delta
    return all(x == 0 for f in force for x in f)

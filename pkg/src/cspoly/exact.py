"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction`; vectors are tuples of them.  Rank
uses fraction-free (Bareiss) elimination on integer-scaled rows, so no
floating point enters any computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]


class DimensionError(ValueError):
    """Points or matrices of inconsistent or degenerate dimension."""


def rat(x) -> Fraction:
    """Coerce ``x`` (int, Fraction or "p/q" text) to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        x = x.strip()
        if "." in x or "e" in x.lower():
            raise ValueError(f"not an exact rational: {x!r}")
    return Fraction(x)


def vec(values: Iterable) -> RatVector:
    return tuple(rat(v) for v in values)


def format_rational(x: Fraction) -> str:
    return str(x)


def dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def primitive(values: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the integer vector with content 1.

    The sign is preserved; the zero vector maps to itself.
    """
    values = [rat(v) for v in values]
    den = reduce(lcm, (v.denominator for v in values), 1)
    ints = [int(v * den) for v in values]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(i // g for i in ints)


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RatMatrix:
        rows = [vec(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise DimensionError(f"row {i} has length {len(r)}, expected {cols}")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> RatVector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[RatVector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> RatMatrix:
        return RatMatrix(self.cols, self.rows, tuple(
            self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def scale_row(self, i: int, c) -> RatMatrix:
        c = rat(c)
        out = list(self.entries)
        for j in range(self.cols):
            out[i * self.cols + j] *= c
        return RatMatrix(self.rows, self.cols, tuple(out))


def _integer_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        den = reduce(lcm, (rat(x).denominator for x in r), 1)
        out.append([int(rat(x) * den) for x in r])
    return out


def integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by Bareiss elimination.  Mutates ``rows``."""
    a = [r for r in rows if any(r)]
    if not a:
        return 0
    n, m = len(a), len(a[0])
    r, prev = 0, 1
    for c in range(m):
        if r == n:
            break
        piv = next((i for i in range(r, n) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        pr = a[r]
        for i in range(r + 1, n):
            ai = a[i]
            f = ai[c]
            if f:
                for j in range(c + 1, m):
                    ai[j] = (p * ai[j] - f * pr[j]) // prev
            else:
                for j in range(c + 1, m):
                    ai[j] = (p * ai[j]) // prev
            ai[c] = 0
        prev = p
        r += 1
    return r


def rank(m: RatMatrix | Sequence[Sequence]) -> int:
    rows = m.row_list() if isinstance(m, RatMatrix) else m
    return integer_rank(_integer_rows(rows))


def rref(m: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    a = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a[:r], pivots


def nullspace(m: RatMatrix) -> list[RatVector]:
    """Basis of the right nullspace {x : m x = 0}."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def nullspace_dim(m: RatMatrix) -> int:
    return m.cols - rank(m)


def _differences(points: Sequence[Sequence]) -> list[RatVector]:
    if not points:
        raise DimensionError("empty point sequence")
    n = len(points[0])
    for p in points:
        if len(p) != n:
            raise DimensionError(f"point of length {len(p)} among points of length {n}")
    p0 = vec(points[0])
    return [tuple(rat(x) - y for x, y in zip(p, p0)) for p in points[1:]]


def affine_dim(points: Sequence[Sequence]) -> int:
    diffs = _differences(points)
    if not diffs:
        return 0
    return rank(diffs)


def affine_hull_coordinates(points: Sequence[Sequence]) -> list[int]:
    """Coordinate indices whose projection is injective on the affine hull.

    These are the pivot columns of the difference matrix; dropping the other
    coordinates is an affine isomorphism of the hull onto its image.
    """
    diffs = _differences(points)
    if not diffs:
        return []
    _, pivots = rref(RatMatrix.from_rows(diffs, len(points[0])))
    return pivots

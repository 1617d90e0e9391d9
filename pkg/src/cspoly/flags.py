"""Flag vectors, f-polynomials and linear flag functionals.

Chain counts ``f_S`` are computed layer by layer: a row vector of chain
counts ending in the faces of one dimension is pushed through the
containment matrix to the next dimension in ``S``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .exact import rat
from .polytope import FaceLattice


class FlagError(ValueError):
    pass


def _key(s: Iterable[int]) -> frozenset[int]:
    return frozenset(int(i) for i in s)


@dataclass(frozen=True)
class FlagVector:
    d: int
    counts: dict = field(hash=False)  # frozenset[int] -> int

    def __getitem__(self, s) -> int:
        if isinstance(s, int):
            s = (s,)
        key = _key(s)
        if key not in self.counts:
            raise KeyError(f"f_S for S={sorted(key)} was not computed")
        return self.counts[key]

    def f(self, *s: int) -> int:
        return self[s]

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(self[(i,)] for i in range(self.d))

    def to_json(self) -> dict:
        return {"d": self.d, "counts": [
            {"S": sorted(k), "f": v}
            for k, v in sorted(self.counts.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))]}


def _containment(lat: FaceLattice, i: int, j: int) -> np.ndarray:
    lo, hi = lat.layer(i), lat.layer(j)
    dtype = np.int64 if lat.d <= 8 else object
    return np.array([[int(a & b == a) for b in hi] for a in lo], dtype=dtype)


def flag_vector(lat: FaceLattice, upto: int | None = None) -> FlagVector:
    """All chain counts ``f_S``, S a subset of {0..d-1} (or ``|S| <= upto``)."""
    d = lat.d
    cap = d if upto is None else min(upto, d)
    dtype = np.int64 if d <= 8 else object
    mats: dict[tuple[int, int], np.ndarray] = {}
    # prefix -> chain counts per face of dimension max(prefix)
    ends: dict[tuple[int, ...], np.ndarray] = {}
    counts: dict[frozenset, int] = {frozenset(): 1}
    for size in range(1, cap + 1):
        for s in combinations(range(d), size):
            if size == 1:
                vec = np.ones(len(lat.layer(s[0])), dtype=dtype)
            else:
                key = (s[-2], s[-1])
                if key not in mats:
                    mats[key] = _containment(lat, *key)
                vec = ends[s[:-1]] @ mats[key]
            ends[s] = vec
            counts[frozenset(s)] = int(vec.sum())
    return FlagVector(d, counts)


@dataclass(frozen=True)
class FPolynomial:
    """Coefficients (f_{d-1}, ..., f_0, 1) of f_P(t), lowest degree first."""

    coefficients: tuple[int, ...]

    @classmethod
    def from_f_vector(cls, f: Iterable[int]) -> FPolynomial:
        return cls(tuple(reversed(tuple(f))) + (1,))

    @property
    def d(self) -> int:
        return len(self.coefficients) - 1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(reversed(self.coefficients[:-1]))

    def __call__(self, t):
        return sum(c * t ** k for k, c in enumerate(self.coefficients))

    def __mul__(self, other: FPolynomial) -> FPolynomial:
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return FPolynomial(tuple(out))


def f_polynomial(lat: FaceLattice) -> FPolynomial:
    return FPolynomial.from_f_vector(lat.f_vector)


def s_value(lat: FaceLattice) -> int:
    """Number of non-empty faces, the polytope included."""
    s = f_polynomial(lat)(1)
    if s != len(lat.faces) - 1:
        raise AssertionError(f"s={s} disagrees with {len(lat.faces) - 1} non-empty faces")
    return s


def g2_toric(fv: FlagVector) -> Fraction:
    d = fv.d
    if d < 3:
        raise FlagError(f"toric g2 formula needs d >= 3, got {d}")
    return Fraction(fv[1] + fv[0, 2] - 3 * fv[2] - d * fv[0] + comb(d + 1, 2))


def _need_d4(fv: FlagVector) -> None:
    if fv.d != 4:
        raise FlagError(f"this functional is defined for 4-polytopes, got d={fv.d}")


def functionals_l1_l2_alpha(fv: FlagVector) -> tuple[Fraction, Fraction, Fraction]:
    """(l1, l2, alpha) with l1 = f02 - 3f2, l2 = f13 - 3f1, alpha = (l1 + l2)/2."""
    _need_d4(fv)
    l1 = Fraction(fv[0, 2] - 3 * fv[2])
    l2 = Fraction(fv[1, 3] - 3 * fv[1])
    if l2 != fv[0, 2] - 3 * fv[1]:
        raise AssertionError("f13 != f02: generalized Dehn-Sommerville violated")
    return l1, l2, (l1 + l2) / 2


@dataclass(frozen=True)
class Check:
    name: str
    holds: bool
    lhs: Fraction
    rhs: Fraction
    relation: str
    applies: bool = True
    note: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "holds": self.holds, "lhs": str(self.lhs),
                "relation": self.relation, "rhs": str(self.rhs),
                "applies": self.applies, "note": self.note}


def _check(name, lhs, rel, rhs, applies=True, note="") -> Check:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    holds = {"=": lhs == rhs, ">=": lhs >= rhs, "<=": lhs <= rhs}[rel]
    return Check(name, holds, lhs, rhs, rel, applies, note)


@dataclass(frozen=True)
class FlagReport:
    checks: tuple[Check, ...]
    center_boolean: bool
    large: bool
    two_simplicial: bool
    two_simple: bool

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks if c.applies)

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks],
                "center_boolean": self.center_boolean, "large": self.large,
                "two_simplicial": self.two_simplicial, "two_simple": self.two_simple}

    def to_markdown(self) -> str:
        lines = ["| check | lhs | rel | rhs | holds | asserted |", "|---|---|---|---|---|---|"]
        for c in self.checks:
            lines.append(f"| {c.name} | {c.lhs} | {c.relation} | {c.rhs} | "
                         f"{'yes' if c.holds else 'no'} | {'yes' if c.applies else 'no'} |")
        lines.append("")
        lines.append(f"center-boolean: {self.center_boolean}; large: {self.large}; "
                     f"2-simplicial: {self.two_simplicial}; 2-simple: {self.two_simple}")
        return "\n".join(lines)


def identities_and_inequalities(fv: FlagVector, cs: bool = False) -> FlagReport:
    """Flag identities and inequalities of 4-polytopes.

    The inequalities specific to centrally symmetric polytopes are always
    evaluated but only asserted (``applies``) when ``cs`` is true.
    """
    _need_d4(fv)
    f0, f1, f2, f3 = fv.f_vector
    l1, l2, _ = functionals_l1_l2_alpha(fv)
    g2 = g2_toric(fv)
    checks = [
        _check("euler", f0 - f1 + f2 - f3, "=", 0),
        _check("gds", fv[0, 3] - fv[1, 3] + fv[2, 3], "=", 2 * f3),
        _check("f23=2f2", fv[2, 3], "=", 2 * f2),
        _check("f02=f13", fv[0, 2], "=", fv[1, 3]),
        _check("bayer", fv[0, 3], "<=", 4 * f2 - 4 * f3,
               note="equality iff center-boolean"),
        _check("bayer-euler", 4 * f2 - 4 * f3, "=", 4 * f1 - 4 * f0),
        _check("l1>=0", l1, ">=", 0),
        _check("l2>=0", l2, ">=", 0),
        _check("g2>=0", g2, ">=", 0),
        _check("cs-g2", g2, ">=", comb(4, 2) - 4, applies=cs, note="centrally symmetric only"),
        _check("cs-f03", fv[0, 3], ">=", 3 * f0 + 3 * f3 - 8, applies=cs,
               note="centrally symmetric only"),
        _check("cs-f2-bound", f2, ">=", Fraction(3 * f0 + 7 * f3, 4) - 2, applies=cs,
               note="centrally symmetric only"),
        _check("cs-f1-bound", f1, ">=", Fraction(7 * f0 + 3 * f3, 4) - 2, applies=cs,
               note="centrally symmetric only"),
    ]
    return FlagReport(
        checks=tuple(checks),
        center_boolean=fv[0, 3] == 4 * f2 - 4 * f3,
        large=f0 + f3 >= 24,
        two_simplicial=l1 == 0,
        two_simple=l2 == 0,
    )


@dataclass(frozen=True)
class Functional:
    name: str
    terms: dict = field(hash=False)  # frozenset[int] -> Fraction

    @classmethod
    def of(cls, name: str, terms: dict) -> Functional:
        return cls(name, {_key(s): rat(c) for s, c in terms.items()})

    @property
    def max_size(self) -> int:
        return max((len(s) for s in self.terms), default=0)

    def to_json(self) -> dict:
        return {"name": self.name, "terms": [
            {"S": sorted(s), "coeff": str(c)}
            for s, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))]}

    @classmethod
    def from_json(cls, data: dict) -> Functional:
        return cls.of(data["name"], {tuple(t["S"]): str(t["coeff"]) for t in data["terms"]})


def load_functionals(text: str) -> list[Functional]:
    """A JSON functional object or a list of them."""
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [Functional.from_json(x) for x in data]


def evaluate_functional(f: Functional, fv: FlagVector) -> Fraction:
    total = Fraction(0)
    for s, c in f.terms.items():
        if any(not 0 <= i < fv.d for i in s):
            raise FlagError(f"index set {sorted(s)} out of range for d={fv.d}")
        total += c * fv[s]
    return total


def face_count_functional(i: int) -> Functional:
    return Functional.of(f"f{i}", {(i,): 1})


L1 = Functional.of("l1", {(0, 2): 1, (2,): -3})
L2 = Functional.of("l2", {(1, 3): 1, (1,): -3})
ALPHA = Functional.of("alpha", {(0, 2): 1, (1,): "-3/2", (2,): "-3/2"})
ZERO = Functional.of("zero", {})

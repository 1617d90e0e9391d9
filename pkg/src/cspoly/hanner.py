"""Hanner polytopes as canonical product/sum expression trees.

A tree is a leaf ``I`` (the segment [-1, 1]), a product ``P(...)`` or a
direct sum ``S(...)``.  Canonical trees are flattened, have sorted children,
and use ``I x I = I + I`` to replace every pair of leaves under a sum by a
square ``P(I,I)``; hence a sum node has at most one leaf child.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, reduce

from . import constructors as cons
from .flags import FlagVector, FPolynomial, Functional, evaluate_functional, flag_vector, s_value
from .polytope import VPolytope, is_centrally_symmetric

MAX_D = 11
HANNER_COUNTS = (1, 1, 2, 4, 8, 18, 40, 94, 224, 548, 1356)

_RANK = {"I": 0, "P": 1, "S": 2}


@dataclass(frozen=True)
class HannerExpr:
    kind: str  # "I", "P" or "S"
    children: tuple = ()

    def __post_init__(self):
        if self.kind not in _RANK:
            raise ValueError(f"unknown node kind {self.kind!r}")
        if (self.kind == "I") != (not self.children):
            raise ValueError("leaves have no children; P and S nodes need children")

    @property
    def dim(self) -> int:
        return 1 if self.kind == "I" else sum(c.dim for c in self.children)

    @property
    def key(self) -> tuple:
        return (_RANK[self.kind], tuple(c.key for c in self.children))

    def __lt__(self, other: HannerExpr) -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        if self.kind == "I":
            return "I"
        return f"{self.kind}({','.join(map(str, self.children))})"

    def dual(self) -> HannerExpr:
        if self.kind == "I":
            return self
        return HannerExpr("S" if self.kind == "P" else "P",
                          tuple(c.dual() for c in self.children))


LEAF = HannerExpr("I")
SQUARE = HannerExpr("P", (LEAF, LEAF))


def P(*children: HannerExpr) -> HannerExpr:
    return HannerExpr("P", tuple(children))


def S(*children: HannerExpr) -> HannerExpr:
    return HannerExpr("S", tuple(children))


def canonicalize(e: HannerExpr) -> HannerExpr:
    if e.kind == "I":
        return e
    kids: list[HannerExpr] = []
    for c in map(canonicalize, e.children):
        if c.kind == e.kind:
            kids.extend(c.children)
        else:
            kids.append(c)
    if e.kind == "S":
        leaves = sum(1 for c in kids if c.kind == "I")
        kids = [c for c in kids if c.kind != "I"] + [SQUARE] * (leaves // 2) + [LEAF] * (leaves % 2)
    if len(kids) == 1:
        return kids[0]
    return HannerExpr(e.kind, tuple(sorted(kids)))


def parse_hanner(text: str) -> HannerExpr:
    """Parse the grammar ``I | P(e,e,...) | S(e,e,...)``."""
    s = text.replace(" ", "")
    pos = 0

    def node() -> HannerExpr:
        nonlocal pos
        if pos >= len(s):
            raise ValueError(f"unexpected end of expression at {pos}")
        ch = s[pos]
        pos += 1
        if ch == "I":
            return LEAF
        if ch not in "PS" or pos >= len(s) or s[pos] != "(":
            raise ValueError(f"unexpected {ch!r} at position {pos - 1}")
        pos += 1
        kids = [node()]
        while pos < len(s) and s[pos] == ",":
            pos += 1
            kids.append(node())
        if pos >= len(s) or s[pos] != ")":
            raise ValueError(f"expected ')' at position {pos}")
        pos += 1
        if len(kids) < 2:
            raise ValueError(f"{ch} node needs at least two children")
        return HannerExpr(ch, tuple(kids))

    e = node()
    if pos != len(s):
        raise ValueError(f"trailing input at position {pos}")
    return e


def cube_expr(d: int) -> HannerExpr:
    return LEAF if d == 1 else canonicalize(P(*[LEAF] * d))


def cross_expr(d: int) -> HannerExpr:
    return LEAF if d == 1 else canonicalize(S(*[LEAF] * d))


def bip_expr(e: HannerExpr) -> HannerExpr:
    return canonicalize(S(LEAF, e))


def prism_expr(e: HannerExpr) -> HannerExpr:
    return canonicalize(P(LEAF, e))


def _multisets(items: list[HannerExpr], d: int, start: int, min_count: int,
               max_leaves: int | None) -> list[list[HannerExpr]]:
    if d == 0:
        return [[]] if min_count <= 0 else []
    out = []
    for i in range(start, len(items)):
        it = items[i]
        if it.dim > d:
            continue
        leaves = max_leaves
        if it.kind == "I":
            if leaves == 0:
                continue
            if leaves is not None:
                leaves -= 1
        for rest in _multisets(items, d - it.dim, i, min_count - 1, leaves):
            out.append([it] + rest)
    return out


@cache
def _nodes(kind: str, d: int) -> tuple[HannerExpr, ...]:
    other = "S" if kind == "P" else "P"
    items = [LEAF] + [e for k in range(2, d) for e in _nodes(other, k)]
    items.sort()
    max_leaves = 1 if kind == "S" else None
    return tuple(HannerExpr(kind, tuple(ch))
                 for ch in _multisets(items, d, 0, 2, max_leaves))


@dataclass(frozen=True)
class HannerCatalog:
    d: int
    entries: tuple  # tuple[(HannerExpr, tuple[int, ...]), ...]

    def __len__(self) -> int:
        return len(self.entries)

    def exprs(self) -> list[HannerExpr]:
        return [e for e, _ in self.entries]

    def f_vectors(self) -> list[tuple[int, ...]]:
        return [f for _, f in self.entries]

    def to_csv(self) -> str:
        head = ["expr"] + [f"f{i}" for i in range(self.d)] + ["s"]
        rows = [",".join(head)]
        for e, f in self.entries:
            rows.append(",".join([f'"{e}"'] + [str(x) for x in f] + [str(1 + sum(f))]))
        return "\n".join(rows) + "\n"


@cache
def enumerate_hanner(d: int) -> HannerCatalog:
    if not 1 <= d <= MAX_D:
        raise ValueError(f"Hanner enumeration is limited to 1 <= d <= {MAX_D}")
    exprs = [LEAF] if d == 1 else sorted(_nodes("P", d) + _nodes("S", d))
    return HannerCatalog(d, tuple((e, hanner_fvector(e)) for e in exprs))


def hanner_polynomial(e: HannerExpr) -> FPolynomial:
    """f-polynomial by algebra: a direct sum multiplies f-polynomials,
    a product is the reversal of the sum of the duals."""
    if e.kind == "I":
        return FPolynomial((2, 1))
    if e.kind == "S":
        return reduce(FPolynomial.__mul__, (hanner_polynomial(c) for c in e.children))
    return FPolynomial.from_f_vector(tuple(reversed(hanner_polynomial(e.dual()).f_vector)))


def hanner_fvector(e: HannerExpr) -> tuple[int, ...]:
    return hanner_polynomial(e).f_vector


def realize(e: HannerExpr) -> VPolytope:
    """A geometric realization with vertices in {-1, 0, 1}."""
    if e.kind == "I":
        return cons.interval()
    op = cons.product if e.kind == "P" else cons.direct_sum
    return reduce(op, (realize(c) for c in e.children))


@cache
def catalog_flag_vectors(d: int) -> tuple[FlagVector, ...]:
    return tuple(flag_vector(realize(e).lattice) for e in enumerate_hanner(d).exprs())


def dominates_some_hanner(fv, d: int) -> HannerExpr | None:
    """A Hanner polytope whose f-vector is componentwise <= ``fv``."""
    fv = tuple(fv)
    if len(fv) != d:
        raise ValueError(f"f-vector of length {len(fv)} for d={d}")
    for e, f in enumerate_hanner(d).entries:
        if all(a >= b for a, b in zip(fv, f)):
            return e
    return None


@dataclass(frozen=True)
class FacetClass:
    facets: int
    label: str  # "cube", "C_{d-3} x C_3^dual" or "other"
    consistent: bool  # facet count bound and the forced type both hold


def hanner_facet_classification(e: HannerExpr) -> FacetClass:
    d = e.dim
    f = hanner_fvector(e)[-1]
    e = canonicalize(e)
    if f == 2 * d:
        return FacetClass(f, "cube", e == cube_expr(d))
    if f == 2 * d + 2 and d >= 3:
        expected = cross_expr(3) if d == 3 else canonicalize(P(cube_expr(d - 3), cross_expr(3)))
        return FacetClass(f, "C_{d-3} x C_3^dual", e == expected)
    return FacetClass(f, "other", f >= 2 * d)


@dataclass(frozen=True)
class FunctionalVerdict:
    name: str
    value: Fraction
    hanner_min: Fraction
    argmin: tuple[str, ...]
    holds: bool


@dataclass(frozen=True)
class ConjectureReport:
    d: int
    f_vector: tuple[int, ...]
    s: int
    a_holds: bool
    b_witness: HannerExpr | None
    f0_plus_fd1: int
    hanner_min_f0_plus_fd1: int
    c_verdicts: tuple[FunctionalVerdict, ...]
    c_common_witness: HannerExpr | None
    caveat: str = ("conjecture C is checked only on the supplied functionals, "
                   "not on the whole cone of non-negative flag functionals")

    @property
    def b_holds(self) -> bool:
        return self.b_witness is not None

    @property
    def c_restricted_holds(self) -> bool:
        return self.c_common_witness is not None

    def to_json(self) -> dict:
        return {
            "d": self.d, "f_vector": list(self.f_vector), "s": self.s,
            "A": {"holds": self.a_holds, "s": self.s, "bound": 3 ** self.d},
            "B": {"holds": self.b_holds,
                  "witness": None if self.b_witness is None else str(self.b_witness),
                  "f0+f_{d-1}": self.f0_plus_fd1,
                  "hanner_min_f0+f_{d-1}": self.hanner_min_f0_plus_fd1},
            "C_restricted": {
                "holds": self.c_restricted_holds,
                "common_witness": None if self.c_common_witness is None else str(self.c_common_witness),
                "functionals": [{"name": v.name, "value": str(v.value),
                                 "hanner_min": str(v.hanner_min), "argmin": list(v.argmin),
                                 "holds": v.holds} for v in self.c_verdicts],
                "caveat": self.caveat},
        }

    def to_markdown(self) -> str:
        lines = [f"f-vector {self.f_vector}, d = {self.d}",
                 f"- A: {'pass' if self.a_holds else 'FAIL'} (s = {self.s} vs 3^{self.d} = {3 ** self.d})"]
        if self.b_holds:
            lines.append(f"- B: pass (witness {self.b_witness})")
        else:
            lines.append(f"- B: FAIL (no Hanner f-vector below; f0+f_(d-1) = {self.f0_plus_fd1}, "
                         f"Hanner minimum {self.hanner_min_f0_plus_fd1})")
        for v in self.c_verdicts:
            lines.append(f"- C[{v.name}]: {'pass' if v.holds else 'FAIL'} "
                         f"(value {v.value}, Hanner minimum {v.hanner_min})")
        if self.c_verdicts:
            lines.append(f"- C restricted: {'pass' if self.c_restricted_holds else 'FAIL'}; {self.caveat}")
        return "\n".join(lines)


class NotCentrallySymmetricError(ValueError):
    pass


def conjecture_report(p: VPolytope, functionals: list[Functional] = ()) -> ConjectureReport:
    if is_centrally_symmetric(p) is None:
        raise NotCentrallySymmetricError("conjectures A, B and C concern centrally symmetric polytopes")
    lat = p.lattice
    d = lat.d
    fvec = lat.f_vector
    s = s_value(lat)
    catalog = enumerate_hanner(d)
    needs_flags = any(f.max_size > 1 for f in functionals)
    fv = flag_vector(lat, upto=max((f.max_size for f in functionals), default=1))
    if needs_flags:
        hanner_fvs = catalog_flag_vectors(d)
    else:
        hanner_fvs = tuple(FlagVector(d, {**{frozenset(): 1},
                                          **{frozenset([i]): x for i, x in enumerate(f)}})
                           for f in catalog.f_vectors())
    verdicts = []
    ok_sets = []
    for fn in functionals:
        value = evaluate_functional(fn, fv)
        hv = [evaluate_functional(fn, h) for h in hanner_fvs]
        lo = min(hv)
        verdicts.append(FunctionalVerdict(
            fn.name, value, lo, tuple(str(e) for e, x in zip(catalog.exprs(), hv) if x == lo),
            value >= lo))
        ok_sets.append({k for k, x in enumerate(hv) if value >= x})
    common = None
    if functionals:
        both = set.intersection(*ok_sets)
        if both:
            common = catalog.exprs()[min(both)]
    return ConjectureReport(
        d=d, f_vector=fvec, s=s, a_holds=s >= 3 ** d,
        b_witness=dominates_some_hanner(fvec, d),
        f0_plus_fd1=fvec[0] + fvec[-1],
        hanner_min_f0_plus_fd1=min(f[0] + f[-1] for f in catalog.f_vectors()),
        c_verdicts=tuple(verdicts), c_common_witness=common)


def facet_count_violations(d: int) -> list[tuple[HannerExpr, FacetClass]]:
    """Catalog entries violating the facet-count classification (empty if it holds)."""
    return [(e, c) for e in enumerate_hanner(d).exprs()
            if not (c := hanner_facet_classification(e)).consistent]


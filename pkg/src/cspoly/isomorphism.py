"""Combinatorial isomorphism of face lattices.

Two polytope lattices are isomorphic iff some vertex bijection carries the
facet vertex-sets of one onto those of the other.  The search is a
backtracking over vertex assignments, pruned by colour refinement on the
vertex/facet incidence graph and by pairwise common-facet counts.
"""

from __future__ import annotations

import os

from .polytope import FaceLattice, bits, mask_of, popcount

DEFAULT_NODE_BUDGET = 10**7


class IsomorphismInconclusive(RuntimeError):
    """The node budget ran out before the search was decided."""


def node_budget() -> int:
    return int(os.environ.get("CSPOLY_NODE_BUDGET", DEFAULT_NODE_BUDGET))


def _vertex_facet_data(lat: FaceLattice) -> tuple[list[int], list[int]]:
    atoms = [m for m in lat.layer(0)]
    order = sorted(a.bit_length() - 1 for a in atoms)
    pos = {v: i for i, v in enumerate(order)}
    facets = [mask_of(pos[v] for v in bits(f)) for f in lat.facets]
    return order, facets


def _refine(facet_lists: list[list[int]], sizes: list[int]) -> list[list[int]]:
    """Stable vertex colours for several incidence structures at once."""
    vcol = [[0] * n for n in sizes]
    fcol = [[0] * len(fs) for fs in facet_lists]
    n_classes = -1
    while True:
        table: dict = {}
        new_f = []
        for g, fs in enumerate(facet_lists):
            sig = [tuple(sorted(vcol[g][v] for v in bits(f))) for f in fs]
            new_f.append(sig)
        for sig in new_f:
            for s in sig:
                table.setdefault(("f", s), len(table))
        fcol = [[table[("f", s)] for s in sig] for sig in new_f]
        new_v = []
        for g, fs in enumerate(facet_lists):
            inc = [[] for _ in range(sizes[g])]
            for j, f in enumerate(fs):
                for v in bits(f):
                    inc[v].append(fcol[g][j])
            new_v.append([(vcol[g][v], tuple(sorted(inc[v]))) for v in range(sizes[g])])
        vtable: dict = {}
        for sig in new_v:
            for s in sorted(sig):
                vtable.setdefault(s, len(vtable))
        vcol = [[vtable[s] for s in sig] for sig in new_v]
        count = len(vtable) + len(table)
        if count == n_classes:
            return vcol
        n_classes = count


def find_isomorphism(a: FaceLattice, b: FaceLattice, budget: int | None = None) -> dict[int, int] | None:
    """A vertex map inducing a lattice isomorphism ``a -> b``, or None.

    Raises :class:`IsomorphismInconclusive` when ``budget`` backtrack nodes
    are exhausted.
    """
    if budget is None:
        budget = node_budget()
    if a.d != b.d or a.f_vector != b.f_vector:
        return None
    va, fa = _vertex_facet_data(a)
    vb, fb = _vertex_facet_data(b)
    n = len(va)
    if sorted(map(popcount, fa)) != sorted(map(popcount, fb)):
        return None
    col_a, col_b = _refine([fa, fb], [n, n])
    if sorted(col_a) != sorted(col_b):
        return None

    def common(fs):
        inc = [0] * n
        for j, f in enumerate(fs):
            for v in bits(f):
                inc[v] |= 1 << j
        return [[popcount(inc[u] & inc[v]) for v in range(n)] for u in range(n)], inc

    ca, _ = common(fa)
    cb, _ = common(fb)
    target = set(fb)

    # rare colours first, then keep the order connected through shared facets
    order: list[int] = []
    seen = set()
    class_size = {c: col_a.count(c) for c in set(col_a)}
    remaining = sorted(range(n), key=lambda v: (class_size[col_a[v]], col_a[v], v))
    while remaining:
        if order:
            last = set(order)
            nxt = max(remaining, key=lambda v: (sum(ca[v][u] > 0 for u in last),
                                                -class_size[col_a[v]]))
        else:
            nxt = remaining[0]
        order.append(nxt)
        seen.add(nxt)
        remaining.remove(nxt)

    candidates = {c: [w for w in range(n) if col_b[w] == c] for c in set(col_a)}
    phi: dict[int, int] = {}
    used = [False] * n
    nodes = 0

    def extend(i: int) -> bool:
        nonlocal nodes
        if i == n:
            return {mask_of(phi[v] for v in bits(f)) for f in fa} == target
        v = order[i]
        for w in candidates[col_a[v]]:
            if used[w]:
                continue
            nodes += 1
            if nodes > budget:
                raise IsomorphismInconclusive(f"node budget {budget} exhausted")
            if any(ca[v][u] != cb[w][x] for u, x in phi.items()):
                continue
            phi[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            del phi[v]
            used[w] = False
        return False

    if not extend(0):
        return None
    return {va[v]: vb[w] for v, w in phi.items()}


def lattice_isomorphic(a: FaceLattice, b: FaceLattice, budget: int | None = None) -> bool:
    return find_isomorphism(a, b, budget) is not None

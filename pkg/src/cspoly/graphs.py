"""Small simple graphs: independence complexes, Berge and self-complementarity checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset  # frozenset[tuple[int, int]] with u < v

    def __post_init__(self):
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {e} for a graph on {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbours(self, u: int) -> set[int]:
        return {b if a == u else a for a, b in self.edges if u in (a, b)}

    def complement(self) -> Graph:
        return Graph(self.n, frozenset(
            e for e in combinations(range(self.n), 2) if e not in self.edges))

    def independent_sets(self) -> list[frozenset[int]]:
        """The independence complex, including the empty set."""
        out = [frozenset()]
        for k in range(1, self.n + 1):
            for s in combinations(range(self.n), k):
                if not any(self.adjacent(u, v) for u, v in combinations(s, 2)):
                    out.append(frozenset(s))
        return out


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def g5() -> Graph:
    """Path on five vertices plus the chord joining its 2nd and 4th vertices."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def _is_induced_cycle(g: Graph, s: tuple[int, ...]) -> bool:
    deg = {v: 0 for v in s}
    count = 0
    for u, v in combinations(s, 2):
        if g.adjacent(u, v):
            deg[u] += 1
            deg[v] += 1
            count += 1
    if count != len(s) or any(x != 2 for x in deg.values()):
        return False
    # 2-regular: a single cycle iff connected
    start = s[0]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in s:
            if v not in seen and g.adjacent(u, v):
                seen.add(v)
                stack.append(v)
    return len(seen) == len(s)


def odd_holes(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets inducing a cycle of odd length >= 5."""
    return [s for k in range(5, g.n + 1, 2) for s in combinations(range(g.n), k)
            if _is_induced_cycle(g, s)]


@dataclass(frozen=True)
class BergeReport:
    holes: tuple
    antiholes: tuple

    @property
    def is_berge(self) -> bool:
        return not self.holes and not self.antiholes


def berge_check(g: Graph) -> BergeReport:
    if g.n > 12:
        raise ValueError("exhaustive Berge check is limited to 12 vertices")
    return BergeReport(tuple(odd_holes(g)), tuple(odd_holes(g.complement())))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force graph isomorphism with degree pruning."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    dg = [len(g.neighbours(v)) for v in range(g.n)]
    dh = [len(h.neighbours(v)) for v in range(h.n)]
    if sorted(dg) != sorted(dh):
        return False
    phi: dict[int, int] = {}

    def extend(v: int) -> bool:
        if v == g.n:
            return True
        for w in range(h.n):
            if w in phi.values() or dg[v] != dh[w]:
                continue
            if all(g.adjacent(u, v) == h.adjacent(x, w) for u, x in phi.items()):
                phi[v] = w
                if extend(v + 1):
                    return True
                del phi[v]
        return False

    return extend(0)


def is_self_complementary(g: Graph) -> bool:
    return are_isomorphic(g, g.complement())


def read_graph(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v" (0-based)."""
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise ValueError("empty graph file")
    lineno, head = lines[0]
    if len(head) != 2:
        raise ValueError(f"line {lineno}: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"line {lineno}: expected integers 'n m'") from None
    if len(lines) - 1 != m:
        raise ValueError(f"line {lineno}: header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for lineno, parts in lines[1:]:
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'u v'") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"line {lineno}: bad edge ({u}, {v}) for a graph on {n} vertices")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"] + [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"

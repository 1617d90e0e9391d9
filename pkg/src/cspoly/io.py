"""Text formats for polytopes and lattices."""

from __future__ import annotations

import json

from .exact import format_rational, rat
from .polytope import FaceLattice, VPolytope


class FormatError(ValueError):
    pass


def write_polytope(p: VPolytope) -> str:
    lines = [f"{p.ambient_dim} {p.n_vertices}"]
    lines += [" ".join(format_rational(x) for x in v) for v in p.vertices]
    return "\n".join(lines) + "\n"


def read_polytope(text: str, check: bool = True) -> VPolytope:
    """Parse "d n" followed by n lines of d rationals."""
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty polytope file")
    lineno, head = lines[0]
    try:
        d, n = (int(x) for x in head)
    except ValueError:
        raise FormatError(f"line {lineno}: expected 'd n'") from None
    if len(lines) - 1 != n:
        raise FormatError(f"line {lineno}: header announces {n} vertices, found {len(lines) - 1}")
    pts = []
    for lineno, parts in lines[1:]:
        if len(parts) != d:
            raise FormatError(f"line {lineno}: expected {d} coordinates, found {len(parts)}")
        try:
            pts.append(tuple(rat(x) for x in parts))
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"line {lineno}: bad rational in {' '.join(parts)!r}") from None
    return VPolytope.from_points(pts, check=check)


def lattice_json(lat: FaceLattice) -> str:
    return json.dumps(lat.to_json())

"""The polytope expression language.

Grammar (whitespace is insignificant except inside slab vectors)::

    expr  := name "(" args ")"
    cube(d) | cross(d) | simplex(d) | interval() | hyper(k,d) | chyper(k)
    prod(A,B,...) | sum(A,B,...) | pyr(A) | bip(A) | prism(A) | tprism(A)
    hansen(G)  with G := path(n) | empty(n) | g5() | @graphfile
    slab(A; a1 a2 ...; lo; hi)
    hanner(I | P(...) | S(...))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from pathlib import Path

from . import constructors as cons
from . import graphs
from .exact import rat
from .hanner import parse_hanner, realize
from .polytope import VPolytope


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_INT_OPS = {"cube": 1, "cross": 1, "simplex": 1, "interval": 0, "hyper": 2, "chyper": 1}
_UNARY = {"pyr", "bip", "prism", "tprism"}
_NARY = {"prod", "sum"}
_GRAPHS = {"path": 1, "empty": 1, "g5": 0}


@dataclass(frozen=True)
class GraphExpr:
    op: str  # "path", "empty", "g5" or "file"
    args: tuple = ()

    def __str__(self) -> str:
        if self.op == "file":
            return f"@{self.args[0]}"
        return f"{self.op}({','.join(map(str, self.args))})"

    def evaluate(self) -> graphs.Graph:
        if self.op == "file":
            return graphs.read_graph(Path(self.args[0]).read_text())
        if self.op == "path":
            return graphs.path(self.args[0])
        if self.op == "empty":
            return graphs.empty_graph(self.args[0])
        return graphs.g5()


@dataclass(frozen=True)
class PolytopeExpr:
    op: str
    args: tuple = ()

    def __str__(self) -> str:
        if self.op == "slab":
            child, a, lo, hi = self.args
            return f"slab({child}; {' '.join(map(str, a))}; {lo}; {hi})"
        return f"{self.op}({','.join(map(str, self.args))})"


_TOKEN = re.compile(r"\s*(?:(@[^\s(),;]+)|([A-Za-z_][A-Za-z_0-9]*)|(-?\d+(?:/\d+)?)|([(),;]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = ("file", "name", "num", "punct")[m.lastindex - 1]
        out.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.take("num")
        if "/" in tok[1]:
            raise ParseError("expected an integer", tok[2])
        return int(tok[1])

    def polytope(self) -> PolytopeExpr:
        _, name, pos = self.take("name")
        self.take("punct", "(")
        if name in _INT_OPS:
            args = []
            for k in range(_INT_OPS[name]):
                if k:
                    self.take("punct", ",")
                args.append(self.integer())
            node = PolytopeExpr(name, tuple(args))
        elif name in _UNARY:
            node = PolytopeExpr(name, (self.polytope(),))
        elif name in _NARY:
            args = [self.polytope()]
            while self.peek()[1] == ",":
                self.take()
                args.append(self.polytope())
            if len(args) < 2:
                raise ParseError(f"{name} needs at least two arguments", pos)
            node = PolytopeExpr(name, tuple(args))
        elif name == "hansen":
            node = PolytopeExpr(name, (self.graph(),))
        elif name == "slab":
            node = self.slab()
        elif name == "hanner":
            start = self.peek()[2]
            depth = 0
            while True:
                tok = self.peek()
                if tok[0] == "end":
                    raise ParseError("unterminated hanner(...)", tok[2])
                if tok[1] == ")" and depth == 0:
                    break
                depth += {"(": 1, ")": -1}.get(tok[1], 0)
                self.take()
            body = self.text[start:self.peek()[2]]
            try:
                node = PolytopeExpr(name, (parse_hanner(body),))
            except ValueError as exc:
                raise ParseError(str(exc), start) from None
        else:
            raise ParseError(f"unknown constructor {name!r}", pos)
        self.take("punct", ")")
        return node

    def graph(self) -> GraphExpr:
        kind, val, pos = self.peek()
        if kind == "file":
            self.take()
            return GraphExpr("file", (val[1:],))
        _, name, pos = self.take("name")
        if name not in _GRAPHS:
            raise ParseError(f"unknown graph {name!r}", pos)
        self.take("punct", "(")
        args = tuple(self.integer() for _ in range(_GRAPHS[name]))
        self.take("punct", ")")
        return GraphExpr(name, args)

    def slab(self) -> PolytopeExpr:
        child = self.polytope()
        self.take("punct", ";")
        normal = []
        while self.peek()[0] == "num":
            normal.append(rat(self.take()[1]))
        if not normal:
            raise ParseError("expected the slab normal vector", self.peek()[2])
        self.take("punct", ";")
        lo = rat(self.take("num")[1])
        self.take("punct", ";")
        hi = rat(self.take("num")[1])
        return PolytopeExpr("slab", (child, tuple(normal), lo, hi))


def parse(text: str) -> PolytopeExpr:
    p = _Parser(text)
    node = p.polytope()
    p.take("end")
    return node


def evaluate(e: PolytopeExpr) -> VPolytope:
    op, args = e.op, e.args
    if op == "cube":
        return cons.cube(args[0])
    if op == "cross":
        return cons.crosspolytope(args[0])
    if op == "simplex":
        return cons.simplex(args[0])
    if op == "interval":
        return cons.interval()
    if op == "hyper":
        return cons.hypersimplex(*args)
    if op == "chyper":
        return cons.central_hypersimplex(args[0])
    if op == "hanner":
        return realize(args[0])
    if op == "hansen":
        return cons.hansen(args[0].evaluate())
    if op == "slab":
        child, a, lo, hi = args
        return cons.slab(evaluate(child), a, lo, hi)
    kids = [evaluate(a) for a in args]
    if op == "prod":
        return reduce(cons.product, kids)
    if op == "sum":
        return reduce(cons.direct_sum, kids)
    return {"pyr": cons.pyramid, "bip": cons.bipyramid, "prism": cons.prism,
            "tprism": cons.twisted_prism}[op](kids[0])


def build(text: str) -> VPolytope:
    return evaluate(parse(text))


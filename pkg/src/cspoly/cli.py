"""Command-line front end: ``cspoly <command> ...``.

Exit status is 0 on success, 1 on a parse, format or computation error and
2 when ``verify-paper`` finds a failing item.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .expr import ParseError, build
from .flags import (FlagError, evaluate_functional, flag_vector, functionals_l1_l2_alpha,
                    g2_toric, identities_and_inequalities, load_functionals, s_value)
from .hanner import NotCentrallySymmetricError, conjecture_report, enumerate_hanner
from .isomorphism import IsomorphismInconclusive
from .io import FormatError, read_polytope, write_polytope
from .polytope import VPolytope, is_centrally_symmetric
from .rigidity import RigidityError, stress_analysis, triangulate_2_skeleton


def load(source: str) -> VPolytope:
    """A polytope file if ``source`` names one, else an expression."""
    if os.path.isfile(source):
        return read_polytope(Path(source).read_text())
    return build(source)


def _functionals(path: str | None):
    return [] if path is None else load_functionals(Path(path).read_text())


def cmd_build(args) -> int:
    text = write_polytope(build(args.expr))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_analyze(args) -> int:
    p = load(args.source)
    lat = p.lattice
    print(f"dimension: {lat.d}")
    print(f"f-vector: {lat.f_vector}")
    print(f"s: {s_value(lat)}")
    cs = is_centrally_symmetric(p) is not None
    print(f"centrally symmetric: {cs}")
    fns = _functionals(args.functionals)
    need = max([2] + [f.max_size for f in fns]) if (args.flags or fns or lat.d == 4) else 0
    fv = flag_vector(lat, upto=None if args.flags else need) if need else None
    if fv is not None and lat.d >= 3:
        print(f"g2_tor: {g2_toric(fv)}")
    if lat.d == 4:
        l1, l2, alpha = functionals_l1_l2_alpha(fv)
        print(f"f02: {fv[0, 2]}")
        print(f"l1: {l1}  l2: {l2}  alpha: {alpha}")
    if args.flags:
        for key, n in sorted(fv.counts.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
            if key:
                print(f"f_{''.join(map(str, sorted(key)))} = {n}")
        if lat.d == 4:
            print(identities_and_inequalities(fv, cs=cs).to_markdown())
    for fn in fns:
        print(f"{fn.name}: {evaluate_functional(fn, fv)}")
    return 0


def cmd_conjectures(args) -> int:
    report = conjecture_report(load(args.source), _functionals(args.functionals))
    print(report.to_markdown())
    return 0


def cmd_hanner(args) -> int:
    text = enumerate_hanner(args.d).to_csv()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_rigidity(args) -> int:
    p = load(args.source)
    fw = triangulate_2_skeleton(p.lattice, p.vertices, symmetric=args.symmetric)
    report = stress_analysis(fw, g2_toric(flag_vector(p.lattice, upto=2)))
    print(json.dumps(report.to_json(), indent=2))
    return 0


def cmd_verify(args) -> int:
    from .verify import overall_pass, report_json, report_markdown, verify_paper

    items = verify_paper()
    md = report_markdown(items)
    if args.output:
        out = Path(args.output)
        out.write_text(report_json(items))
        out.with_suffix(".md").write_text(md)
    sys.stdout.write(md)
    return 0 if overall_pass(items) else 2


def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cspoly", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="evaluate an expression and write its vertices")
    b.add_argument("expr")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="f-vector, s and flag data")
    a.add_argument("source", help="polytope file or expression")
    a.add_argument("--flags", action="store_true", help="print the full flag vector")
    a.add_argument("--functionals", metavar="FILE")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("conjectures", help="check conjectures A, B and restricted C")
    c.add_argument("source")
    c.add_argument("--functionals", metavar="FILE")
    c.set_defaults(func=cmd_conjectures)

    h = sub.add_parser("hanner", help="Hanner polytope catalog")
    hsub = h.add_subparsers(dest="action", required=True)
    he = hsub.add_parser("enumerate")
    he.add_argument("d", type=int)
    he.add_argument("-o", "--output")
    he.set_defaults(func=cmd_hanner)

    r = sub.add_parser("rigidity", help="stress space of the triangulated 2-skeleton")
    r.add_argument("source")
    r.add_argument("--symmetric", action="store_true")
    r.set_defaults(func=cmd_rigidity)

    v = sub.add_parser("verify-paper", help="recompute every tabulated claim")
    v.add_argument("-o", "--output", metavar="REPORT.json")
    v.set_defaults(func=cmd_verify)
    return ap


ERRORS = (ParseError, FormatError, FlagError, RigidityError, NotCentrallySymmetricError,
          IsomorphismInconclusive, ValueError, OSError, ArithmeticError)


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    try:
        return args.func(args)
    except ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

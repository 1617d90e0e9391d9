from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cspoly import constructors as cons
from cspoly.cli import main
from cspoly.expr import ParseError, build, parse
from cspoly.io import FormatError, lattice_json, read_polytope, write_polytope

EXPRESSIONS = [
    "cube(4)", "cross(3)", "simplex(2)", "interval()", "hyper(3,6)", "chyper(2)",
    "prod(cube(2),cross(2),interval())", "sum(cube(3),interval())", "pyr(cube(2))",
    "bip(cube(3))", "prism(cross(3))", "tprism(simplex(3))", "hansen(path(4))",
    "hansen(empty(3))", "hansen(g5())", "slab(cube(4); 1 1 1 1; -2; 2)",
    "slab(cube(3); 1/2 0 0; -1/4; 1/4)", "hanner(S(I,P(I,I,I)))",
]


@pytest.mark.parametrize("text", EXPRESSIONS)
def test_parse_print_round_trip(text):
    e = parse(text)
    assert parse(str(e)) == e
    assert str(parse(str(e))) == str(e)


def test_whitespace_insensitive():
    assert parse(" prod( cube(2) ,  interval( ) ) ") == parse("prod(cube(2),interval())")


@pytest.mark.parametrize("text, pos", [("cube(", 5), ("cube(4", 6), ("frob(2)", 0),
                                       ("sum(cube(2))", 0), ("cube(4) x", 8), ("cube(1/2)", 5),
                                       ("cube(4$)", 6)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos


def test_evaluate():
    assert build("bip(cube(3))").lattice.f_vector == (10, 28, 30, 12)
    assert build("hanner(S(I,P(I,I,I)))").lattice.f_vector == (10, 28, 30, 12)
    assert build("prod(interval(),interval(),interval())") == cons.cube(3)


def test_graph_file_in_expression(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("4 3\n0 1\n1 2\n2 3\n")
    assert build(f"hansen(@{g})").lattice.f_vector == (16, 64, 98, 64, 16)


def test_polytope_file_round_trip():
    p = build("slab(cube(3); 1/2 0 0; -1/4; 1/4)")
    assert read_polytope(write_polytope(p)) == p
    assert read_polytope("# a square\n2 4\n1 1\n1 -1\n-1 1\n-1 -1\n") == cons.cube(2)


@pytest.mark.parametrize("text, line", [
    ("2 3\n0 0\n1 0\n", 1),
    ("2 3\n0 0\n1 0 0\n0 1\n", 3),
    ("2 3\n0 0\n1 x\n0 1\n", 3),
    ("2 3\n0 0\n0.5 0\n0 1\n", 3),
    ("two three\n", 1),
])
def test_polytope_file_errors(text, line):
    with pytest.raises(FormatError, match=f"line {line}"):
        read_polytope(text)


def test_lattice_json():
    data = json.loads(lattice_json(cons.cube(2).lattice))
    assert data[0] == {"vertices": [], "dim": -1} and data[-1]["dim"] == 2


def test_cli_build_and_analyze(tmp_path, capsys):
    out = tmp_path / "p4.txt"
    assert main(["build", "slab(cube(4); 1 1 1 1; -2; 2)", "-o", str(out)]) == 0
    assert main(["analyze", str(out)]) == 0
    text = capsys.readouterr().out
    assert "f02: 108" in text and "alpha: 6" in text
    assert main(["analyze", "cube(4)", "--flags"]) == 0
    text = capsys.readouterr().out
    assert "f_03 = 64" in text and "| bayer | 64 | <= | 64 | yes | yes |" in text


def test_cli_functionals(tmp_path, capsys):
    f = tmp_path / "alpha.json"
    f.write_text(json.dumps({"name": "alpha", "terms": [
        {"S": [0, 2], "coeff": "1"}, {"S": [1], "coeff": "-3/2"}, {"S": [2], "coeff": "-3/2"}]}))
    assert main(["analyze", "cube(4)", "--functionals", str(f)]) == 0
    assert "alpha: 12" in capsys.readouterr().out
    assert main(["conjectures", "slab(cube(4); 1 1 1 1; -2; 2)", "--functionals", str(f)]) == 0
    text = capsys.readouterr().out
    assert "C[alpha]: FAIL (value 6, Hanner minimum 9)" in text


def test_cli_conjectures_hg4(capsys):
    assert main(["conjectures", "hansen(path(4))"]) == 0
    text = capsys.readouterr().out
    assert "A: pass (s = 259" in text and "B: FAIL" in text


def test_cli_hanner_and_rigidity(tmp_path, capsys):
    out = tmp_path / "h4.csv"
    assert main(["hanner", "enumerate", "4", "-o", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 5
    assert main(["rigidity", "cube(4)", "--symmetric"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["stress_dim"] == 2 and rep["sym_stress_dim"] == 2 and rep["matches_g2"]


@pytest.mark.parametrize("argv", [["analyze", "cube("], ["build", "cube(0)"],
                                  ["conjectures", "simplex(3)"], ["rigidity", "cube(2)"],
                                  ["hanner", "enumerate", "12"]])
def test_cli_errors_exit_1(argv, capsys):
    assert main(argv) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_cli_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cspoly", "analyze", "cross(3)"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "f-vector: (6, 12, 8)" in r.stdout
    r = subprocess.run([sys.executable, "-m", "cspoly", "analyze", "cube(x)"],
                       capture_output=True, text=True)
    assert r.returncode == 1 and "position 5" in r.stderr

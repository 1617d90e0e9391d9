from __future__ import annotations

import json

import pytest

from cspoly.cli import main
from cspoly.verify import (AMBIGUITY_WHITELIST, AMBIGUOUS, FAIL, PASS, Claim, overall_pass,
                           report_json, report_markdown, verify_paper, _verdict)


@pytest.fixture(scope="module")
def items():
    return verify_paper()


def test_claims_need_citations():
    with pytest.raises(ValueError):
        Claim("x", 1, "  ")


def test_verdict_rules():
    assert _verdict(Claim("a", 3, "here"), 3) == PASS
    assert _verdict(Claim("a", (1, 2), "here"), (2, 1)) == FAIL
    assert AMBIGUITY_WHITELIST == {"dim4.P4.fvec"}
    assert _verdict(Claim("dim4.P4.fvec", (10, 32, 36, 14), "here"), (14, 36, 32, 10)) == AMBIGUOUS
    assert _verdict(Claim("dim4.P4.fvec", (10, 32, 36, 14), "here"), (14, 36, 30, 10)) == FAIL


def test_items_sorted_and_unique(items):
    ids = [it.id for it in items]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    assert all(it.citation for it in items)


def test_spot_items(items):
    by_id = {it.id: it for it in items}
    assert by_id["dim5.HG4.s"].computed == 259 and by_id["dim5.HG4.s"].verdict == PASS
    assert by_id["hanner.count.d6"].claimed == 18 and by_id["hanner.count.d6"].verdict == PASS
    assert by_id["dim4.P4.fvec"].verdict == AMBIGUOUS
    assert by_id["dim4.P4.alpha"].verdict == PASS


def test_only_known_failure(items):
    # the printed s of prism HS3 is 908 while 1 + sum of its printed f-vector is 909
    failing = [it for it in items if it.verdict == FAIL]
    assert [(it.id, it.claimed, it.computed) for it in failing] == [("dim6.prismHS3.s", 908, 909)]
    assert not overall_pass(items)


def test_json_deterministic(items):
    a = report_json(items)
    assert a == report_json(verify_paper())
    data = json.loads(a)
    assert data["ambiguity_whitelist"] == ["dim4.P4.fvec"]
    assert "| dim5.HG4.s | 259 | 259 | pass |" in report_markdown(items)


def test_cli_verify_paper(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify-paper", "-o", str(out)]) == 2
    assert json.loads(out.read_text())["ok"] is False
    assert (tmp_path / "report.md").read_text() == capsys.readouterr().out

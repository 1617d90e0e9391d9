from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cspoly import constructors as cons
from cspoly.corpus import named
from cspoly.flags import ALPHA, L1, ZERO, s_value
from cspoly.hanner import (LEAF, HANNER_COUNTS, HannerExpr, NotCentrallySymmetricError,
                           bip_expr, canonicalize, conjecture_report, cross_expr, cube_expr,
                           dominates_some_hanner, enumerate_hanner, hanner_facet_classification,
                           hanner_fvector, parse_hanner, prism_expr, facet_count_violations, realize)
from cspoly.isomorphism import lattice_isomorphic

trees = st.recursive(
    st.just(LEAF),
    lambda kids: st.builds(HannerExpr, st.sampled_from("PS"),
                           st.lists(kids, min_size=1, max_size=3).map(tuple)),
    max_leaves=8)


@settings(max_examples=200, deadline=None)
@given(trees)
def test_canonicalize_idempotent_and_in_catalog(e):
    c = canonicalize(e)
    assert canonicalize(c) == c
    assert c.dim == e.dim
    assert hanner_fvector(c) == hanner_fvector(e)
    assert canonicalize(e.dual()) == canonicalize(c.dual())
    assert c in enumerate_hanner(e.dim).exprs()


def test_hanner_counts():
    assert HANNER_COUNTS[:8] == (1, 1, 2, 4, 8, 18, 40, 94)
    for d, n in enumerate(HANNER_COUNTS, start=1):
        assert len(enumerate_hanner(d)) == n


def test_s_is_3_to_the_d():
    for d in range(1, 9):
        assert all(1 + sum(f) == 3 ** d for f in enumerate_hanner(d).f_vectors())


def test_catalog_closed_under_duality():
    for d in range(1, 9):
        exprs = set(enumerate_hanner(d).exprs())
        assert {canonicalize(e.dual()) for e in exprs} == exprs
        fvs = set(enumerate_hanner(d).f_vectors())
        assert {tuple(reversed(f)) for f in fvs} == fvs


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_realizations_pairwise_non_isomorphic(d):
    lats = [realize(e).lattice for e in enumerate_hanner(d).exprs()]
    for a, b in combinations(lats, 2):
        assert not lattice_isomorphic(a, b)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_algebra_matches_lattice(d):
    for e in enumerate_hanner(d).exprs():
        p = realize(e)
        assert p.lattice.f_vector == hanner_fvector(e)
        assert s_value(p.lattice) == 3 ** d


def test_table_rows():
    assert set(enumerate_hanner(4).f_vectors()) == {
        (16, 32, 24, 8), (8, 24, 32, 16), (10, 28, 30, 12), (12, 30, 28, 10)}
    assert hanner_fvector(bip_expr(bip_expr(cube_expr(3)))) == (12, 48, 86, 72, 24)
    assert hanner_fvector(bip_expr(prism_expr(cross_expr(4)))) == (18, 88, 200, 240, 146, 36)
    assert hanner_fvector(cube_expr(5)) == (32, 80, 80, 40, 10)


def test_parse_and_print():
    e = parse_hanner("S(I, P(I,I,I))")
    assert str(e) == "S(I,P(I,I,I))" and parse_hanner(str(e)) == e
    for bad in ("S(I)", "Q(I,I)", "P(I,I", "I I"):
        with pytest.raises(ValueError):
            parse_hanner(bad)


def test_facet_classification():
    for d in range(1, 9):
        assert facet_count_violations(d) == []
    c = hanner_facet_classification(canonicalize(parse_hanner("P(I,I,S(I,I,I))")))
    assert c.label == "C_{d-3} x C_3^dual" and c.consistent


def test_csv():
    lines = enumerate_hanner(3).to_csv().splitlines()
    assert lines[0] == "expr,f0,f1,f2,s"
    assert len(lines) == 3 and all(line.endswith(",27") for line in lines[1:])


def test_dominates():
    assert dominates_some_hanner((16, 64, 98, 64, 16), 5) is None
    assert dominates_some_hanner((20, 90, 120, 60, 12), 5) is None
    assert dominates_some_hanner((10, 32, 36, 14), 4) == bip_expr(cube_expr(3))
    assert dominates_some_hanner((14, 36, 32, 10), 4) == prism_expr(cross_expr(3))
    with pytest.raises(ValueError):
        dominates_some_hanner((1, 2), 3)


def test_conjecture_report_p4():
    r = conjecture_report(named("P4"), [ALPHA, L1, ZERO])
    assert r.a_holds and r.s == 93 and r.b_holds
    alpha = r.c_verdicts[0]
    assert alpha.value == 6 and alpha.hanner_min == 9 and not alpha.holds
    assert not r.c_restricted_holds and r.c_common_witness is None
    assert "supplied functionals" in r.to_markdown()
    assert r.to_json()["C_restricted"]["functionals"][0]["value"] == "6"


def test_conjecture_report_hg4():
    r = conjecture_report(named("HG4"))
    assert r.a_holds and not r.b_holds
    assert (r.f0_plus_fd1, r.hanner_min_f0_plus_fd1) == (32, 34)


def test_conjecture_report_rejects_non_cs():
    with pytest.raises(NotCentrallySymmetricError):
        conjecture_report(cons.simplex(3))

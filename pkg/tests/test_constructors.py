from __future__ import annotations

import warnings
from itertools import combinations

import pytest

from cspoly import constructors as cons
from cspoly.exact import DimensionError
from cspoly.flags import f_polynomial
from cspoly.graphs import (Graph, berge_check, empty_graph, g5, is_self_complementary, path,
                           read_graph, write_graph)
from cspoly.hanner import enumerate_hanner, realize
from cspoly.isomorphism import lattice_isomorphic
from cspoly.polytope import combinatorial_dual, full_dimensional, is_centrally_symmetric


def fvec(p):
    return p.lattice.f_vector


def test_basic_families():
    assert fvec(cons.cube(4)) == (16, 32, 24, 8)
    assert fvec(cons.crosspolytope(4)) == (8, 24, 32, 16)
    assert cons.interval().n_vertices == 2 == cons.cube(1).n_vertices
    with pytest.raises(ValueError):
        cons.cube(0)


def test_products_and_sums():
    i = cons.interval()
    assert fvec(cons.product(cons.product(i, i), i)) == (8, 12, 6)
    assert fvec(cons.direct_sum(cons.cube(3), i)) == (10, 28, 30, 12)
    assert fvec(cons.product(i, cons.crosspolytope(3))) == (12, 30, 28, 10)
    with pytest.raises(ValueError):
        cons.direct_sum(cons.simplex(2), i)


def test_product_sum_duality():
    a = cons.product(cons.cube(2), cons.crosspolytope(3))
    b = cons.direct_sum(cons.crosspolytope(2), cons.cube(3))
    assert lattice_isomorphic(combinatorial_dual(a.lattice), b.lattice)
    for d in range(2, 6):
        for e in enumerate_hanner(d).exprs():
            assert lattice_isomorphic(combinatorial_dual(realize(e).lattice),
                                      realize(e.dual()).lattice)


def test_pyramid_bipyramid_prism():
    assert fvec(cons.bipyramid(cons.cube(2))) == (6, 12, 8)
    q = cons.cube(3)
    two_plus_t = f_polynomial(cons.interval().lattice)  # f_I(t) = 2 + t
    assert f_polynomial(cons.bipyramid(q).lattice) == two_plus_t * f_polynomial(q.lattice)
    assert fvec(cons.prism(cons.crosspolytope(4))) == (16, 56, 88, 64, 18)
    assert fvec(cons.pyramid(cons.cube(2))) == (5, 8, 5)


def test_twisted_prism():
    sq = cons.cube(2)
    assert lattice_isomorphic(cons.twisted_prism(sq).lattice, cons.cube(3).lattice)
    t = cons.twisted_prism(cons.simplex(3))
    assert t.n_vertices == 8 and is_centrally_symmetric(t) is not None
    hs3 = cons.twisted_prism(full_dimensional(cons.hypersimplex(3, 5)))
    assert len(hs3.incidence.facets) == 12


def test_hypersimplex():
    assert cons.hypersimplex(2, 4).n_vertices == 6
    assert lattice_isomorphic(cons.hypersimplex(2, 4).lattice, cons.crosspolytope(3).lattice)
    assert fvec(cons.hypersimplex(3, 6)) == (20, 90, 120, 60, 12)
    s = cons.hypersimplex(1, 5)
    assert s.n_vertices == 5 and s.intrinsic_dim == 4
    with pytest.raises(ValueError):
        cons.hypersimplex(0, 3)
    for k in (2, 3):
        hs = cons.central_hypersimplex(k)
        assert is_centrally_symmetric(hs) is not None
        assert hs.dim == 2 * k - 1 and len(hs.incidence.facets) == 4 * k


def test_slab():
    p4 = cons.slab(cons.cube(4), (1, 1, 1, 1), -2, 2)
    assert sorted(fvec(p4)) == [10, 14, 32, 36]
    with pytest.warns(cons.SlabContainsPolytopeWarning):
        same = cons.slab(cons.cube(3), (0, 0, 1), -1, 1)
    assert same == cons.cube(3)
    cut = cons.slab(cons.cube(3), (1, 1, 1), -1, 1)
    # the two cuts pass through the neighbours of (1,1,1) and (-1,-1,-1)
    assert fvec(cut) == (6, 12, 8)
    assert is_centrally_symmetric(cut) is not None
    with pytest.raises(ValueError):
        cons.slab(cons.cube(3), (1, 0, 0), 5, 6)
    with pytest.raises(DimensionError):
        cons.slab(cons.cube(3), (1, 0), -1, 1)


def _independent_sets(g):
    return [s for k in range(g.n + 1) for s in combinations(range(g.n), k)
            if not any(g.adjacent(u, v) for u, v in combinations(s, 2))]


@pytest.mark.parametrize("g", [path(4), g5(), empty_graph(3), path(3), Graph.from_edges(3, [(0, 1)])],
                         ids=["P4", "G5", "E3", "P3", "K2+K1"])
def test_hansen_vertex_count(g):
    h = cons.hansen(g)
    assert h.n_vertices == 2 * len(_independent_sets(g)) == 2 * len(g.independent_sets())
    assert is_centrally_symmetric(h) is not None


def test_hansen_examples():
    assert fvec(cons.hansen(path(4))) == (16, 64, 98, 64, 16)
    assert fvec(cons.hansen(g5())) == (24, 116, 232, 232, 116, 24)
    assert lattice_isomorphic(cons.hansen(empty_graph(3)).lattice, cons.cube(4).lattice)


def test_hansen_warns_on_non_berge():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    with pytest.warns(cons.NonBergeWarning):
        cons.hansen(c5)
    # complement of C7 has an odd antihole but no odd hole of its own
    c7 = Graph.from_edges(7, [(i, (i + 1) % 7) for i in range(7)])
    rep = berge_check(c7.complement())
    assert not rep.holes and rep.antiholes and not rep.is_berge
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        cons.hansen(path(4))


def test_self_complementary():
    assert is_self_complementary(path(4))
    assert is_self_complementary(g5())
    assert not is_self_complementary(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


def test_graph_file_round_trip():
    g = g5()
    assert read_graph(write_graph(g)) == g
    with pytest.raises(ValueError, match="line 2"):
        read_graph("3 1\n0 7\n")
    with pytest.raises(ValueError, match="line 1"):
        read_graph("x y\n")


def test_twisted_prism_facet_bound():
    for d, i in ((4, 1), (5, 1), (5, 2)):
        f = cons.direct_sum(cons.centered_simplex(i), cons.centered_simplex(d - i - 1))
        p = cons.twisted_prism(f)
        assert p.dim == d
        assert len(p.incidence.facets) >= 2 * (1 + (i + 1) * (d - i))

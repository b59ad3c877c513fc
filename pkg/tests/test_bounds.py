import sympy
import pytest
from hypothesis import given, strategies as st

from reflexpoly.bounds import (
    central_bound_check,
    conjecture_check,
    facet_characterization_3d,
    facet_invariants,
    floor_plus_twice_sqrt,
    lemma_fund_check,
    mod_k_analysis,
    symmetric_simplicial_check,
    terminal_points_check,
    verify_thm100,
    vertex_bounds,
    z2_power,
)
from reflexpoly.errors import (
    NotCanonical,
    NotCentrallySymmetric,
    NotSimplexFacet,
    NotSimplicial,
    WrongDimension,
)
from reflexpoly.gallery import cell24, cross, cube, hexagon, polygon, segment, simplex, wirth, zonotope
from reflexpoly.polytope import Polytope, free_sum, product
from reflexpoly.reflexive import dual, is_terminal


@given(st.integers(-50, 50), st.integers(0, 10 ** 8))
def test_floor_sqrt_matches_sympy(a, x):
    assert floor_plus_twice_sqrt(a, x) == sympy.floor(a + 2 * sympy.sqrt(x))


def test_hexagon_bounds():
    rep = vertex_bounds(hexagon())
    assert rep.values["bounds.case_large_alpha"] == 6
    assert rep.passed


def test_simplicial_3d_bound_values():
    rep = vertex_bounds(cross(3))
    assert facet_invariants(cross(3)) == (3, 3)
    assert rep.values["bounds.bound2"] == 17
    assert rep["bounds.simplicial"] == "pass"


@pytest.mark.parametrize("name", ["hexagon", "wirth", "cell24", "cube 3", "cube 4", "cross 4",
                                  "zonotope 4", "product hexagon hexagon", "sum hexagon hexagon"])
def test_bounds_hold(gallery, name):
    assert vertex_bounds(gallery[name]).passed


def test_lemma_fund(reflexive_gallery):
    for name, p in reflexive_gallery.items():
        for i, f in enumerate(p.facets):
            if len(f.vertices) == p.dim:
                rep = lemma_fund_check(p, i)
                assert rep.passed, (name, i, rep.failures())
    with pytest.raises(NotSimplexFacet):
        lemma_fund_check(cube(3), 0)


def test_lemma_fund_part3_applies_somewhere(reflexive_gallery):
    statuses = [lemma_fund_check(p, i)["fund.3"]
                for p in reflexive_gallery.values()
                for i, f in enumerate(p.facets) if len(f.vertices) == p.dim]
    assert "pass" in statuses and "fail" not in statuses


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_zonotope_mod2(d):
    z = zonotope(d)
    assert z.n_vertices == 2 ** (d + 1) - 2
    rep = mod_k_analysis(z, 2)
    assert rep.passed
    assert rep["mod.size_bound"] == "pass"
    assert rep.values["mod.symmetric_pairs"] >= z.n_vertices + 1 - 2 ** d
    tp = terminal_points_check(z)
    assert tp["termpts.bound"] == "pass" and tp["termpts.equality_symmetric"] == "pass"


def test_mod_hypothesis_not_met():
    # cube 2: (1,1) ~ (1,-1) span a segment with three lattice points.
    rep = mod_k_analysis(cube(2), 2)
    assert rep.values["mod.hypothesis"] is False
    assert rep["mod.size_bound"] == "n/a"


def test_mod3_on_other_sets():
    rep = mod_k_analysis(cube(2), 3, cube(2).lattice_points())
    assert rep.values["mod.injective"] is True


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_cube_central(d):
    rep = central_bound_check(cube(d))
    assert rep.passed
    assert rep.values["central.points"] == 3 ** d
    assert rep.values["central.is_cube"] is True


def test_central_non_cube():
    rep = central_bound_check(cell24())
    assert rep.passed and rep.values["central.is_cube"] is False
    with pytest.raises(NotCentrallySymmetric):
        central_bound_check(simplex(3))
    big = Polytope([(2, 0), (-2, 0), (0, 1), (0, -1)])
    with pytest.raises(NotCanonical):
        central_bound_check(big)


def test_facet_characterization():
    assert facet_characterization_3d(cross(3))
    assert not facet_characterization_3d(cube(3))
    assert facet_characterization_3d(zonotope(3)) == is_terminal(zonotope(3))
    with pytest.raises(WrongDimension):
        facet_characterization_3d(hexagon())


def test_thm100_on_corpus_sample(corpus):
    for p in corpus[:60]:
        assert verify_thm100(p).passed


def test_vertconj_extremal():
    p = product(hexagon(), hexagon())
    assert p.n_vertices == 36
    c = conjecture_check(p)
    assert c.values["conj.vertconj.equality"] is True
    assert c.values["conj.vertconj.extremal_type"] is True


def test_mainconj_values():
    s = free_sum(hexagon(), hexagon())
    c = conjecture_check(s)
    assert c.values["conj.mainconj.bound"] == 12
    assert c.values["conj.mainconj.equality"] is True
    assert c.values["conj.mainconj.extremal_type"] is True


def test_symmetric_simplicial_even():
    s = dual(z2_power(2))
    assert s.n_vertices == 12
    rep = symmetric_simplicial_check(s)
    assert rep.passed
    assert rep["csymmy.equality_type"] == "pass" and rep.values["csymmy.extremal"] is True


def test_symmetric_simplicial_odd():
    s = dual(product(segment(), hexagon()))
    assert s.n_vertices == 8
    rep = symmetric_simplicial_check(s)
    assert rep.passed and rep.values["csymmy.extremal"] is True
    with pytest.raises(NotSimplicial):
        symmetric_simplicial_check(cube(3))


def test_symmetric_simplicial_on_corpus(corpus):
    for p in corpus:
        if p.is_simplicial():
            assert symmetric_simplicial_check(p).passed
            assert p.n_vertices <= 8

"""The thirteen acceptance criteria, one test each.

Every test prints a single ``[AC n] PASS|FAIL ...`` line; the lines are
repeated in the terminal summary.  Run directly with ``python3
tests/test_acceptance.py`` to get only the table.
"""

import time
from collections import Counter

import pytest

from reflexpoly.bounds import (
    central_bound_check,
    facet_characterization_3d,
    mod_k_analysis,
    symmetric_simplicial_check,
    twelve_relation,
    vertex_bounds,
    z2_power,
)
from reflexpoly.classify import classify_reflexive_2d
from reflexpoly.corpus import corpus_3d
from reflexpoly.gallery import POLYGON_LABELS, cell24, cube, hexagon, polygon, segment, wirth, zonotope
from reflexpoly.normal_form import _cached_normal_form, isomorphic
from reflexpoly.polytope import product
from reflexpoly.projection import dual_slice, project, verify_projection_claims
from reflexpoly.reflexive import (
    discrepancy,
    dual,
    is_canonical,
    is_fano,
    is_reflexive,
    is_smooth,
    is_terminal,
)
from reflexpoly.relations import casa_bound_check, graph_check, sweep_pairs

from oracles import discrepancy_by_gauge

RESULTS = {}


def record(n, ok, what, detail=""):
    line = f"[AC {n:2d}] {'PASS' if ok else 'FAIL'}  {what}"
    if detail:
        line += f"  ({detail})"
    RESULTS[n] = line
    print(line)
    assert ok, line


def full_corpus():
    from reflexpoly.gallery import standard_gallery

    gal = [p for p in standard_gallery().values() if p.dim >= 2]
    return gal + corpus_3d()


@pytest.fixture(scope="module")
def everything():
    return full_corpus()


def test_ac01_classification():
    t = time.time()
    res = classify_reflexive_2d()
    dt = time.time() - t
    counts = sorted(c.n_boundary for c in res.classes)
    smooth = sum(c.smooth for c in res.classes)
    labels = set(res.labels())
    closed = all(c.dual_label in labels for c in res.classes)
    ok = (len(res.classes) == 16 and counts == [3, 4, 4, 4, 5, 5, 6, 6, 6, 6, 7, 7, 8, 8, 8, 9]
          and smooth == 5 and closed and dt < 300)
    record(1, ok, "d=2 classification: 16 classes, boundary multiset, 5 smooth, dual-closed",
           f"{len(res.classes)} classes, {smooth} smooth, {dt:.1f}s")


def test_ac02_twelve():
    sums = {lab: twelve_relation(polygon(lab)) for lab in POLYGON_LABELS}
    record(2, set(sums.values()) == {12}, "12-relation on all 16 classes",
           f"sums {sorted(set(sums.values()))}")


def test_ac03_wirth():
    p = wirth()
    v = (0, 0, 0, 1)
    img = project(p, v).image
    facts = {
        "vertices": p.n_vertices == 8,
        "facets": len(p.facets) == 16,
        "simplicial": p.is_simplicial(),
        "symmetric": p.is_centrally_symmetric(),
        "terminal": is_terminal(p),
        "reflexive": is_reflexive(p),
        "not smooth": not is_smooth(p),
        "image 6 vertices": img.n_vertices == 6,
        "image terminal Fano": is_fano(img) and is_terminal(img),
        "image not reflexive": not is_reflexive(img),
        "slice not lattice": not dual_slice(p, v).is_lattice,
    }
    bad = [k for k, ok in facts.items() if not ok]
    record(3, not bad, "Wirth example and its projection along e4", ", ".join(bad))


def test_ac04_cell24():
    _cached_normal_form.cache_clear()
    t = time.time()
    p = cell24()
    ok = (p.n_vertices == 24 and is_reflexive(p) and is_terminal(p)
          and p.is_centrally_symmetric() and isomorphic(p, dual(p)))
    dt = time.time() - t
    record(4, ok and dt < 30, "24-cell reflexive, terminal, symmetric, self-dual", f"{dt:.2f}s")


def test_ac05_zonotopes():
    bad = []
    for d in range(2, 6):
        z = zonotope(d)
        rep = mod_k_analysis(z, 2)
        s = rep.values["mod.symmetric_pairs"]
        ok = (is_reflexive(z) and is_terminal(z) and z.n_vertices == 2 ** (d + 1) - 2
              and rep.passed and rep.get("mod.symmetric_bound") == "pass"
              and s >= z.n_vertices + 1 - 2 ** d)
        if not ok:
            bad.append(d)
    record(5, not bad, "Z_d terminal reflexive with 2^(d+1)-2 vertices, d=2..5",
           f"failing d {bad}" if bad else "")


def test_ac06_cubes():
    bad = []
    for d in range(2, 6):
        rep = central_bound_check(cube(d))
        if not (len(cube(d).lattice_points()) == 3 ** d and rep.passed
                and rep["central.proof_step"] == "pass" and rep.values["central.is_cube"]):
            bad.append(d)
    record(6, not bad, "[-1,1]^d has 3^d points, mod-3 step, cube recognized, d=2..5",
           f"failing d {bad}" if bad else "")


def test_ac07_trichotomy():
    polys = [polygon(lab) for lab in POLYGON_LABELS] + corpus_3d() + [wirth()]
    pairs, failures = 0, []
    for p in polys:
        stats = sweep_pairs(p)
        pairs += stats["pairs"]
        failures += stats["failures"]
    record(7, pairs >= 10 ** 4 and not failures, "trichotomy and primitive relations",
           f"{pairs} pairs, {len(failures)} failures")


def test_ac08_graph(everything):
    bad = [p for p in everything if not graph_check(p).passed]
    record(8, not bad, "W(P) diameter <= 3, distance-3 pairs antipodal",
           f"{len(everything)} polytopes, {len(bad)} failures")


def test_ac09_projection(everything):
    t = time.time()
    runs, bad = 0, []
    for p in everything:
        for v in p.boundary_points():
            runs += 1
            rep = verify_projection_claims(p, v)
            if not rep.passed:
                bad.append((p.vertices, v, [c.name for c in rep.failures()]))
    dt = time.time() - t
    record(9, not bad and dt < 600, "projection claims 1-8 on all (P, v)",
           f"{runs} projections, {len(bad)} failures, {dt:.0f}s")


def test_ac10_bounds(everything):
    bad = []
    checked_casa = 0
    for p in everything:
        if not vertex_bounds(p).passed:
            bad.append(("bounds", p.vertices))
        if p.dim == 3 and p.is_simplicial() and p.n_vertices > 10:
            bad.append(("d^2+1", p.vertices))
        if p.is_simplicial():
            checked_casa += 1
            rep = casa_bound_check(p)
            if rep["casa.non_star_bound"] != "pass":
                bad.append(("casa", p.vertices))
    record(10, not bad, "vertex bounds and non-star bound",
           f"{len(everything)} polytopes, {checked_casa} simplicial, {len(bad)} failures")


def test_ac11_discrepancy():
    from reflexpoly.gallery import standard_gallery

    bad = []
    for name, p in standard_gallery().items():
        disc = discrepancy(p)
        if is_terminal(p) != (disc > 0) or is_canonical(p) != (disc >= 0):
            bad.append(name)
    hexa = discrepancy(hexagon()) == 1 == discrepancy_by_gauge(hexagon().vertices)
    sq = discrepancy(cube(2)) == 0 == discrepancy_by_gauge(cube(2).vertices)
    record(11, not bad and hexa and sq, "discrepancy: terminal iff > 0, canonical iff >= 0",
           f"hexagon {discrepancy(hexagon())}, square {discrepancy(cube(2))}")


def test_ac12_facet_characterization():
    corpus = corpus_3d()
    disagree = [p for p in corpus if facet_characterization_3d(p) != is_terminal(p)]
    terminal = sum(is_terminal(p) for p in corpus)
    record(12, len(corpus) >= 200 and not disagree,
           "facet characterization equals terminality on the d=3 corpus",
           f"{len(corpus)} polytopes, {terminal} terminal, {len(disagree)} disagreements")


def test_ac13_extremal():
    z22 = z2_power(2)
    d22 = dual(z22)
    even = symmetric_simplicial_check(d22)
    odd_p = dual(product(segment(), hexagon()))
    odd = symmetric_simplicial_check(odd_p)
    ok = (z22.n_vertices == 36 and d22.is_simplicial() and d22.n_vertices == 12
          and even.passed and even["csymmy.equality_type"] == "pass"
          and even.values["csymmy.extremal"]
          and odd_p.n_vertices == 8 and odd.passed and odd.values["csymmy.extremal"])
    record(13, ok, "extremal cases Z2xZ2, its dual, dual([-1,1]xZ2)",
           f"{z22.n_vertices}, {d22.n_vertices}, {odd_p.n_vertices} vertices")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))

"""Vertex and lattice-point bounds, counting modulo k, and related checkers."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import isqrt

from .errors import (
    NotCanonical,
    NotCentrallySymmetric,
    NotSimplexFacet,
    NotSimplicial,
    WrongDimension,
)
from .lattice import add, det, dot, neg, solve, transpose
from .normal_form import isomorphic
from .polytope import Polytope, product
from .reflexive import dual, is_canonical, is_fano, is_terminal, require_reflexive
from .report import CheckReport, fmt_point


# -- vertex bounds -------------------------------------------------------------

def facet_invariants(p: Polytope) -> tuple:
    """alpha = most vertices on a facet, beta = most ridges on a facet."""
    alpha = max(len(f.vertices) for f in p.facets)
    ridge_count = [0] * len(p.facets)
    for r in p.ridges():
        for i in r.facets:
            ridge_count[i] += 1
    return alpha, max(ridge_count)


def floor_plus_twice_sqrt(a: int, x: int) -> int:
    """floor(a + 2 sqrt(x)) for integers a and x >= 0, exactly."""
    return a + isqrt(4 * x)


def vertex_bounds(p: Polytope) -> CheckReport:
    require_reflexive(p)
    d = p.dim
    n = p.n_vertices
    alpha, beta = facet_invariants(p)
    rep = CheckReport()
    rep.values.update({"bounds.vertices": n, "bounds.alpha": alpha, "bounds.beta": beta})
    b1 = 2 * d * alpha
    rep.values["bounds.bound1"] = b1
    rep.add("bounds.bound1", n <= b1, f"{n} > {b1}")
    if alpha >= 2 * d - 3:
        c = 2 * d * (alpha - d + 2) - 2
        rep.values["bounds.case_large_alpha"] = c
        rep.add("bounds.case_large_alpha", n <= c, f"{n} > {c}")
    else:
        rep.skip("bounds.case_large_alpha", "alpha < 2d - 3")
    if alpha <= 2 * d - 3:
        c = d * alpha + alpha - d + 1
        rep.values["bounds.case_small_alpha"] = c
        rep.add("bounds.case_small_alpha", n <= c, f"{n} > {c}")
    else:
        rep.skip("bounds.case_small_alpha", "alpha > 2d - 3")
    if p.is_simplicial() and d >= 3:
        rep.add("bounds.simplicial", n <= d * d + 1, f"{n} > {d * d + 1}")
    else:
        rep.skip("bounds.simplicial")
    x = (alpha - 1) * (d + 1) * ((alpha - 1) + (alpha - d + 1) * beta)
    b2 = floor_plus_twice_sqrt((alpha - d + 1) * beta + 2, x)
    rep.values["bounds.bound2"] = b2
    rep.add("bounds.bound2", n <= b2, f"{n} > {b2}")
    return rep


# -- the fundamental lemma ------------------------------------------------------

def dual_basis_coordinates(basis, m) -> tuple:
    """(<e_1^*, m>, ..., <e_d^*, m>): coordinates of m in the basis e_i."""
    return solve(transpose(basis), m)


def lemma_fund_check(p: Polytope, facet_index: int) -> CheckReport:
    require_reflexive(p)
    d = p.dim
    f = p.facets[facet_index]
    if len(f.vertices) != d:
        raise NotSimplexFacet(f"facet {facet_index} is not a simplex")
    rep = CheckReport()
    u = f.normal  # eta_F, integral since P is reflexive
    ms = [m for m in p.boundary_points() if dot(u, m) == 0]
    neighbours = dict(p.neighbours(facet_index))

    bad = [m for m in ms if not any(p.facets[j].slack(m) == 0 for j in neighbours)]
    rep.add("fund.union", not bad, fmt_point(bad[0]) if bad else "")

    e = p.facet_vertices(facet_index)
    fset = set(f.vertices)
    opposite = {}
    for j, common in neighbours.items():
        (missing,) = fset - set(common)
        opposite[f.vertices.index(missing)] = j

    # eta_{F_i} = u + alpha_i e_i^* for every admissible choice of m^i.
    # e_i^* as covectors: row i holds the values on the standard basis.
    std = [dual_basis_coordinates(e, tuple(int(k == j) for k in range(d))) for j in range(d)]
    estars = [tuple(std[j][i] for j in range(d)) for i in range(d)]
    ok, detail = True, ""
    for i in range(d):
        eta_i = p.facets[opposite[i]].eta
        estar = estars[i]
        for mi in p.facet_points(opposite[i]):
            if f.slack(mi) == 0:
                continue
            a_i = Fraction(-1 - dot(u, mi), dot(estar, mi))
            if a_i <= 0 or tuple(Fraction(x) + a_i * y for x, y in zip(u, estar)) != eta_i:
                ok, detail = False, f"facet {opposite[i]} with m^i = {fmt_point(mi)}"
                break
        if not ok:
            break
    rep.add("fund.eta_formula", ok, detail)

    ok, detail = True, ""
    for m in ms:
        coords = dual_basis_coordinates(e, m)
        for i in range(d):
            inside = p.facets[opposite[i]].slack(m) == 0
            if (not inside) != (coords[i] >= 0):
                ok, detail = False, f"m = {fmt_point(m)}, i = {i}"
                break
        if not ok:
            break
    rep.add("fund.1", ok, detail)

    ok, detail, applies = True, "", False
    for m in ms:
        on = [i for i in range(d) if p.facets[opposite[i]].slack(m) == 0]
        if len(on) == 1:
            applies = True
            if p.share_facet(m, e[on[0]]):
                ok, detail = False, f"m = {fmt_point(m)} ~ {fmt_point(e[on[0]])}"
                break
    rep.add("fund.2", ok if applies else None, detail)

    # (3): if d - 1 of the indices admit m^i with <u, m^i> = 0 and <e_i^*, m^i> = -1.
    good = []
    for i in range(d):
        for mi in p.facet_points(opposite[i]):
            if f.slack(mi) != 0 and dot(u, mi) == 0 and dual_basis_coordinates(e, mi)[i] == -1:
                good.append(i)
                break
    if len(good) >= d - 1:
        rep.add("fund.3", abs(det(e)) == 1, f"det {det(e)}")
    else:
        rep.skip("fund.3", "hypothesis not met")
    return rep


# -- counting modulo k ----------------------------------------------------------

def mod_k_fibers(points, k: int) -> dict:
    fibers = {}
    for x in points:
        fibers.setdefault(tuple(a % k for a in x), []).append(x)
    return fibers


def symmetric_pairs(points) -> int:
    s = set(points)
    return sum(1 for x in s if neg(x) in s and x > neg(x))


def mod_k_analysis(p: Polytope, k: int, points=None) -> CheckReport:
    """Fibres of M -> M/kM on a set B of boundary points (default: the vertices)."""
    points = tuple(p.vertices if points is None else points)
    if not points:
        raise ValueError("the point set must be nonempty")
    d = p.dim
    fibers = mod_k_fibers(points, k)
    rep = CheckReport()
    rep.values["mod.k"] = k
    rep.values["mod.size"] = len(points)
    rep.values["mod.fibers"] = len(fibers)
    rep.values["mod.max_fiber"] = max(len(v) for v in fibers.values())
    rep.values["mod.injective"] = all(len(v) == 1 for v in fibers.values())
    s = symmetric_pairs(points)
    rep.values["mod.symmetric_pairs"] = s
    if k != 2:
        return rep
    hyp = all(not p.share_facet(x, y) or gcd_of_difference(x, y) == 1
              for x, y in combinations(points, 2))
    rep.values["mod.hypothesis"] = hyp
    if not (hyp and d >= 2 and is_fano(p) and is_canonical(p)):
        rep.skip("mod.size_bound", "hypothesis not met")
        rep.skip("mod.symmetric_bound", "hypothesis not met")
        return rep
    zero = (0,) * d
    ok = zero not in fibers and all(
        len(v) == 1 or (len(v) == 2 and add(v[0], v[1]) == zero) for v in fibers.values())
    rep.add("mod.fibers_structure", ok, "a fibre is not a single point or a symmetric pair")
    rep.add("mod.size_bound", len(points) <= 2 ** (d + 1) - 2, f"{len(points)}")
    rep.add("mod.symmetric_bound", s >= len(points) + 1 - 2 ** d,
            f"s = {s} < {len(points) + 1 - 2 ** d}")
    return rep


def gcd_of_difference(x, y) -> int:
    from math import gcd

    g = 0
    for a, b in zip(x, y):
        g = gcd(g, a - b)
    return g


def terminal_points_check(p: Polytope) -> CheckReport:
    """|boundary points| = |V| <= 2^(d+1) - 2 for terminal P, equality forcing symmetry."""
    rep = CheckReport()
    if not (is_fano(p) and is_terminal(p)):
        rep.skip("termpts.bound", "not terminal")
        return rep
    d = p.dim
    n = p.n_vertices
    rep.add("termpts.bound", len(p.boundary_points()) == n <= 2 ** (d + 1) - 2, f"{n}")
    if n == 2 ** (d + 1) - 2:
        rep.add("termpts.equality_symmetric", p.is_centrally_symmetric())
    else:
        rep.skip("termpts.equality_symmetric", "no equality")
    return rep


def central_bound_check(p: Polytope) -> CheckReport:
    if not p.is_centrally_symmetric():
        raise NotCentrallySymmetric("polytope is not centrally symmetric")
    if not (is_fano(p) and is_canonical(p)):
        raise NotCanonical("polytope is not a canonical Fano polytope")
    d = p.dim
    pts = p.lattice_points()
    fibers = mod_k_fibers(pts, 3)
    rep = CheckReport()
    # The proof step: (x - y)/3 = x/3 + (-y)/3 + 0/3 lies in int P for any
    # lattice points x, y, so equal residues force x = y.
    bad = next(((x, y) for x, y in combinations(pts, 2)
                if not p.in_interior(tuple(Fraction(a - b, 3) for a, b in zip(x, y)))), None)
    rep.add("central.proof_step", bad is None,
            f"{fmt_point(bad[0])} {fmt_point(bad[1])}" if bad else "")
    rep.add("central.injective", all(len(v) == 1 for v in fibers.values()))
    rep.add("central.bound", len(pts) <= 3 ** d, f"{len(pts)} > {3 ** d}")
    facet_counts = [len(p.facet_points(i)) for i in range(len(p.facets))]
    rep.add("central.facet_bound", max(facet_counts) <= 3 ** (d - 1), f"{max(facet_counts)}")
    rep.values["central.points"] = len(pts)
    if all(f.level == 1 for f in p.facets):
        from .gallery import cube

        e1 = len(pts) == 3 ** d
        e2 = all(c == 3 ** (d - 1) for c in facet_counts)
        e3 = isomorphic(p, cube(d))
        rep.add("central.equality_cases", e1 == e2 == e3, f"{e1} {e2} {e3}")
        rep.values["central.is_cube"] = e3
    return rep


# -- three-dimensional facet characterization ------------------------------------

def _good_facet(vertices) -> bool:
    if len(vertices) == 3:
        return abs(det(vertices)) == 1
    if len(vertices) == 4:
        a, b, c, e = vertices
        for (v, x), (w, y) in (((a, b), (c, e)), ((a, c), (b, e)), ((a, e), (b, c))):
            if add(v, x) == add(w, y) and abs(det([v, x, w])) == 1:
                return True
    return False


def facet_characterization_3d(p: Polytope) -> bool:
    """Every facet is a unimodular triangle or a unimodular parallelogram."""
    if p.dim != 3:
        raise WrongDimension("the facet characterization is three dimensional")
    require_reflexive(p)
    return all(_good_facet(p.facet_vertices(i)) for i in range(len(p.facets)))


def verify_thm100(p: Polytope) -> CheckReport:
    rep = CheckReport()
    char = facet_characterization_3d(p)
    term = is_terminal(p)
    rep.add("thm100.agrees", char == term, f"characterization={char} terminal={term}")
    return rep


# -- conjectures and the symmetric simplicial case --------------------------------

def z2_power(k: int) -> Polytope:
    from .gallery import hexagon

    out = hexagon()
    for _ in range(k - 1):
        out = product(out, hexagon())
    return out


def _extremal_even(d: int) -> Polytope:
    return z2_power(d // 2)


def _extremal_odd(d: int) -> Polytope:
    from .gallery import segment

    seg = segment()
    return seg if d == 1 else product(seg, z2_power((d - 1) // 2))


def _simplicial_bound(d: int) -> int:
    return 3 * d if d % 2 == 0 else 3 * d - 1


def conjecture_check(p: Polytope) -> CheckReport:
    """Report (never assert) the conjectured vertex bounds and equality types."""
    require_reflexive(p)
    d, n = p.dim, p.n_vertices
    rep = CheckReport()
    holds = n * n <= 6 ** d
    equal = n * n == 6 ** d
    rep.values["conj.vertconj.holds"] = holds
    rep.values["conj.vertconj.equality"] = equal
    if equal:
        rep.values["conj.vertconj.extremal_type"] = d % 2 == 0 and isomorphic(p, _extremal_even(d))
    if p.is_simplicial():
        bound = _simplicial_bound(d)
        rep.values["conj.mainconj.bound"] = bound
        rep.values["conj.mainconj.holds"] = n <= bound
        rep.values["conj.mainconj.equality"] = n == bound
        if n == bound and d % 2 == 0:
            rep.values["conj.mainconj.extremal_type"] = isomorphic(dual(p), _extremal_even(d))
    return rep


def symmetric_vertex_of_dual(p: Polytope):
    """A vertex u of P* with -u in P*, i.e. <u, x> <= 1 on P, or ``None``."""
    for f in p.facets:
        if all(dot(f.normal, x) <= 1 for x in p.vertices):
            return f.normal
    return None


def symmetric_simplicial_check(p: Polytope) -> CheckReport:
    require_reflexive(p)
    if not p.is_simplicial():
        raise NotSimplicial("polytope is not simplicial")
    d, n = p.dim, p.n_vertices
    bound = _simplicial_bound(d)
    rep = CheckReport()
    u = symmetric_vertex_of_dual(p)
    rep.values["symmy.hypothesis"] = u is not None
    rep.values["symmy.vertices"] = n
    rep.values["symmy.bound"] = bound
    if u is not None:
        rep.values["symmy.witness"] = fmt_point(u)
        rep.add("symmy.bound", n <= bound, f"{n} > {bound}")
        if d % 2 == 0:
            iso = isomorphic(dual(p), _extremal_even(d))
            rep.add("symmy.equality_type", (n == bound) == iso, f"equality={n == bound} type={iso}")
    else:
        rep.skip("symmy.bound", "no vertex u of P* with -u in P*")
    if p.is_centrally_symmetric():
        rep.add("csymmy.bound", n <= bound, f"{n} > {bound}")
        target = _extremal_even(d) if d % 2 == 0 else _extremal_odd(d)
        iso = isomorphic(dual(p), target)
        rep.add("csymmy.equality_type", (n == bound) == iso, f"equality={n == bound} type={iso}")
        rep.values["csymmy.extremal"] = iso
    else:
        rep.skip("csymmy.bound", "not centrally symmetric")
    return rep


# -- two-dimensional consequences ---------------------------------------------------

def cor_six_check(classes) -> CheckReport:
    """Max vertices 6 only for 6a; a facet with 5 lattice points only for 8c."""
    from .relations import max_facet_points

    rep = CheckReport()
    most = max(c.polygon.n_vertices for c in classes)
    with_most = [c.label for c in classes if c.polygon.n_vertices == most]
    rep.add("six.vertices", most == 6 and with_most == ["6a"], f"{most} {with_most}")
    longest = max(max_facet_points(c.polygon) for c in classes)
    with_longest = [c.label for c in classes if max_facet_points(c.polygon) == longest]
    rep.add("six.facet_points", longest == 5 and with_longest == ["8c"], f"{longest} {with_longest}")
    return rep


def twelve_relation(p: Polytope) -> int:
    q = dual(p)
    return len(p.boundary_points()) + len(q.boundary_points())

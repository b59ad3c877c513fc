"""Slow, independent reference computations used to cross-check the library."""

from fractions import Fraction
from itertools import combinations, permutations, product

import sympy


def facets_by_subsets(points):
    """Facet inequalities <n, x> + c >= 0 from all d-subsets of the points.

    A hyperplane through d affinely independent points is a facet when every
    point lies on one side of it.  Normals come from sympy's nullspace.
    """
    pts = [tuple(p) for p in points]
    d = len(pts[0])
    found = set()
    for subset in combinations(pts, d):
        rows = [list(p) + [1] for p in subset]
        null = sympy.Matrix(rows).nullspace()
        if len(null) != 1:
            continue
        vec = null[0]
        den = sympy.ilcm(*[x.q for x in vec])
        ints = [int(x * den) for x in vec]
        g = sympy.igcd(*ints)
        ints = [x // g for x in ints]
        normal, c = tuple(ints[:d]), ints[d]
        vals = [sum(a * b for a, b in zip(normal, p)) + c for p in pts]
        if all(v >= 0 for v in vals):
            found.add((normal, c))
        elif all(v <= 0 for v in vals):
            found.add((tuple(-a for a in normal), -c))
    return found


def lattice_points_by_inequalities(points):
    ineqs = facets_by_subsets(points)
    d = len(points[0])
    lo = [min(p[i] for p in points) for i in range(d)]
    hi = [max(p[i] for p in points) for i in range(d)]
    out = []
    for x in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if all(sum(a * b for a, b in zip(n, x)) + c >= 0 for n, c in ineqs):
            out.append(x)
    return sorted(out)


def gauge(ineqs, x):
    """max over facets of -<n, x>/c: the smallest t with x in tP."""
    return max(Fraction(-sum(a * b for a, b in zip(n, x)), c) for n, c in ineqs)


def discrepancy_by_gauge(points):
    """min(gauge(m) - 1) over lattice points m of 2P that are not 0 or a vertex."""
    ineqs = facets_by_subsets(points)
    verts = {tuple(v) for v in points}
    doubled = [tuple(2 * a for a in p) for p in points]
    best = None
    for m in lattice_points_by_inequalities(doubled):
        if not any(m) or m in verts:
            continue
        val = gauge(ineqs, m) - 1
        best = val if best is None else min(best, val)
    return best


def isomorphic_2d_bruteforce(p_vertices, q_vertices):
    """Try every map sending two independent vertices of P to two vertices of Q."""
    pv, qv = list(p_vertices), set(q_vertices)
    if len(pv) != len(qv):
        return False
    a, b = next((u, v) for u in pv for v in pv if u[0] * v[1] - u[1] * v[0] != 0)
    det_ab = a[0] * b[1] - a[1] * b[0]
    for x, y in permutations(qv, 2):
        # Solve M a = x, M b = y over Q, then test integrality and |det| = 1.
        rows = []
        for k in range(2):
            m0 = Fraction(x[k] * b[1] - y[k] * a[1], det_ab)
            m1 = Fraction(y[k] * a[0] - x[k] * b[0], det_ab)
            rows.append((m0, m1))
        if any(e.denominator != 1 for r in rows for e in r):
            continue
        m = [[int(e) for e in r] for r in rows]
        if abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) != 1:
            continue
        image = {(m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]) for v in pv}
        if image == qv:
            return True
    return False

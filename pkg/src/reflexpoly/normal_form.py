"""Unimodular normal forms of lattice polytopes.

The normal form of P is the lexicographically smallest Hermite normal form
of the vertex matrix (vertices as columns) over all column orders.  Row-style
HNF has the prefix property: the first k columns of HNF(A) only depend on
the first k columns of A.  The search therefore builds the order one column
at a time and keeps only the branches that reach the smallest next column.

Given a branch with transform U and prefix rank r, appending a vertex a with
b = U a gives the next HNF column in closed form: with g the gcd of
b[r:], the column is (b[0] mod g, ..., b[r-1] mod g, g, 0, ...), or b itself
when g = 0.  Once the prefix has rank d the transform is fixed and the rest
of the columns are just the images U a in sorted order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .lattice import UnimodularMap, gcd_list, hermite_normal_form, mat_vec
from .polytope import Polytope


@dataclass(frozen=True)
class NormalForm:
    """Canonical d x n integer matrix of an isomorphism class."""

    matrix: tuple

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def columns(self) -> tuple:
        return tuple(zip(*self.matrix))

    def to_polytope(self) -> Polytope:
        return Polytope(self.columns)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.matrix)


def _column(r, b, d):
    """Next HNF column for image b at prefix rank r, and the tail gcd."""
    g = gcd_list(b[r:])
    if g == 0:
        return b, 0
    return tuple(x % g for x in b[:r]) + (g,) + (0,) * (d - r - 1), g


@lru_cache(maxsize=65536)
def _tail_transform(tail):
    """Unimodular V with V * tail = (gcd, 0, ..., 0)."""
    return hermite_normal_form(tuple((x,) for x in tail))[1].matrix


def _advance(u, r, b, g, d):
    """Transform after appending b with tail gcd g > 0."""
    rows = list(u[:r])
    tail_rows = u[r:]
    for vr in _tail_transform(b[r:]):
        rows.append(tuple(sum(c * t[j] for c, t in zip(vr, tail_rows)) for j in range(d)))
    piv = rows[r]
    for i in range(r):
        q = b[i] // g
        if q:
            rows[i] = tuple(x - q * y for x, y in zip(rows[i], piv))
    return tuple(rows)


_INT64_SAFE = 2 ** 62


def _image_matrix(vmat, vmax, u, d):
    """The d x n matrix U V of vertex images.

    int64 is used when |U| * |a| * d cannot overflow; otherwise Python
    integers (object arrays) keep the product exact.
    """
    try:
        arr = np.array(u, dtype=np.int64)
    except OverflowError:
        arr = None
    if arr is not None and int(np.abs(arr).max()) * vmax * d < _INT64_SAFE:
        return arr @ vmat
    return np.array(u, dtype=object) @ vmat.astype(object)


def _smallest_columns(prod, unused, r, d):
    """Smallest next column over the unused vertices and the vertices reaching it.

    Returns ``(column, [(k, image, tail gcd), ...])``.
    """
    if prod.dtype == object:
        cands = [(_column(r, tuple(prod[:, k]), d), k) for k in unused]
        best = min(c for (c, _), _ in cands)
        return best, [(k, tuple(prod[:, k]), g) for (c, g), k in cands if c == best]
    sub = prod[:, unused]
    if r < d:
        g = np.gcd.reduce(sub[r:], axis=0)
    else:
        g = np.zeros(len(unused), dtype=np.int64)
    cols = sub.copy()
    pos = g > 0
    if pos.any():
        cols[:r, pos] = sub[:r, pos] % g[pos]
        cols[r, pos] = g[pos]
        cols[r + 1:, pos] = 0
    first = np.lexsort(cols[::-1])[0]
    best = cols[:, first]
    ties = np.nonzero((cols == best[:, None]).all(axis=0))[0]
    return (tuple(best.tolist()),
            [(unused[t], tuple(sub[:, t].tolist()), int(g[t])) for t in ties])


def _image_key(prod):
    """Hashable form of the set of columns of an image matrix."""
    return tuple(sorted(map(tuple, prod.T.tolist())))


def _search(vertices, d):
    """Column-by-column search for the lexicographically smallest HNF.

    A branch is a transform U together with the vertices used so far.  Since
    U maps the used vertices exactly onto the prefix columns, the future of a
    branch only depends on the image set U V; branches with equal image sets
    differ by an automorphism of P and are merged.
    """
    n = len(vertices)
    vmat = np.array(vertices, dtype=np.int64).T
    vmax = max(abs(x) for v in vertices for x in v)
    ident = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    start = _image_matrix(vmat, vmax, ident, d)
    # image key -> (used bitmask, transform, prefix rank, image matrix)
    branches = {_image_key(start): (0, ident, 0, start)}
    columns = []
    while len(columns) < n:
        full = [b for b in branches.values() if b[2] == d]
        if len(full) == len(branches):
            best, witnesses = None, []
            for m, u, _, prod in full:
                imgs = prod.T.tolist()
                rest = sorted(tuple(imgs[k]) for k in range(n) if not m >> k & 1)
                if best is None or rest < best:
                    best, witnesses = rest, [u]
                elif rest == best:
                    witnesses.append(u)
            columns.extend(best)
            return columns, witnesses
        best = None
        nxt = {}
        for m, u, r, prod in branches.values():
            unused = [k for k in range(n) if not m >> k & 1]
            col, reach = _smallest_columns(prod, unused, r, d)
            if best is not None and col > best:
                continue
            if best is None or col < best:
                best = col
                nxt = {}
            for k, b, g in reach:
                if g:
                    u2 = _advance(u, r, b, g, d)
                    prod2 = _image_matrix(vmat, vmax, u2, d)
                    nxt.setdefault(_image_key(prod2), (m | 1 << k, u2, r + 1, prod2))
                else:
                    nxt.setdefault((_image_key(prod), m | 1 << k), (m | 1 << k, u, r, prod))
        columns.append(best)
        branches = nxt
    return columns, [u for _, u, _, _ in branches.values()]


@lru_cache(maxsize=4096)
def _cached_normal_form(vertices, d) -> NormalForm:
    cols, _ = _search(vertices, d)
    return NormalForm(tuple(zip(*cols)))


def normal_form(p: Polytope) -> NormalForm:
    return _cached_normal_form(p.vertices, p.dim)


def normal_form_transform(p: Polytope):
    """Normal form together with one unimodular map U realizing it.

    ``U`` maps the vertex set of P onto the column set of the normal form.
    """
    cols, witnesses = _search(p.vertices, p.dim)
    return NormalForm(tuple(zip(*cols))), UnimodularMap(witnesses[0])


def isomorphic(p: Polytope, q: Polytope) -> bool:
    if p.dim != q.dim or p.n_vertices != q.n_vertices or len(p.facets) != len(q.facets):
        return False
    return normal_form(p) == normal_form(q)

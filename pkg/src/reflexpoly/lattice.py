"""Exact integer linear algebra on Z^d.

Vectors are tuples of Python ints and matrices are tuples of row tuples, so
everything here is hashable, immutable and arbitrary precision.  Rational
quantities only appear where a true rational is meant (inverses, solutions of
linear systems) and are represented by :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from .errors import NotPrimitive, ZeroVector

IntVector = tuple
IntMatrix = tuple


def vec(values) -> IntVector:
    return tuple(int(x) for x in values)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(k, v):
    return tuple(k * a for a in v)


def neg(v):
    return tuple(-a for a in v)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(rows) -> IntMatrix:
    return tuple(zip(*rows))


def mat_vec(rows, v):
    return tuple(dot(r, v) for r in rows)


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(r, c) for c in bt) for r in a)


def gcd_list(values) -> int:
    g = 0
    for x in values:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def lcm_list(values) -> int:
    out = 1
    for x in values:
        out = out * x // gcd(out, x)
    return out


def primitivize(v: Sequence[int]) -> tuple[IntVector, int]:
    """Split ``v`` as ``g * p`` with ``p`` primitive and ``g >= 1``."""
    v = vec(v)
    g = gcd_list(v)
    if g == 0:
        raise ZeroVector(f"cannot primitivize the zero vector {v}")
    return tuple(x // g for x in v), g


def is_primitive(v) -> bool:
    return gcd_list(v) == 1


def lattice_length(u, v) -> int:
    """Number of lattice points on the segment [u, v] minus one."""
    return gcd_list(sub(v, u))


def det(rows) -> int:
    """Determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank(rows) -> int:
    """Rank over Q of a list of (integer or rational) row vectors."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def affine_rank(points) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    points = list(points)
    if not points:
        return -1
    base = points[0]
    return rank([tuple(a - b for a, b in zip(p, base)) for p in points[1:]])


def solve(rows, rhs):
    """Solve the square system ``rows * x = rhs`` exactly; ``None`` if singular."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return tuple(m[i][n] for i in range(n))


def inverse(rows):
    """Rational inverse of a square matrix; ``None`` if singular."""
    n = len(rows)
    cols = [solve(rows, tuple(int(i == j) for i in range(n))) for j in range(n)]
    if any(c is None for c in cols):
        return None
    return transpose(cols)


def kernel_vector(rows, ncols: int):
    """Primitive integer generator of the kernel of a corank-one system.

    Returns ``None`` when the kernel is not one dimensional.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        return None
    f = free[0]
    sol = [Fraction(0)] * ncols
    sol[f] = Fraction(1)
    for i, c in enumerate(pivots):
        sol[c] = -m[i][f]
    den = lcm_list(x.denominator for x in sol)
    return primitivize([x * den for x in sol])[0]


def hermite_normal_form(a) -> tuple[IntMatrix, "UnimodularMap"]:
    """Row-style Hermite normal form ``H = U * A`` with ``U`` unimodular.

    Convention: the pivot columns of the nonzero rows strictly increase, each
    pivot is positive, entries above a pivot lie in ``[0, pivot)`` and zero rows
    come last.  ``H`` is the unique such matrix in the left-unimodular orbit of
    ``A``; ``U`` is one (not necessarily unique) transformation reaching it.
    """
    h = [list(r) for r in a]
    m = len(h)
    n = len(h[0]) if m else 0
    u = [list(r) for r in identity(m)]

    def row_sub(i, k, q):
        # row_i -= q * row_k
        hi, hk = h[i], h[k]
        for j in range(n):
            hi[j] -= q * hk[j]
        ui, uk = u[i], u[k]
        for j in range(m):
            ui[j] -= q * uk[j]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nonzero = [i for i in range(r, m) if h[i][c] != 0]
            if not nonzero:
                break
            piv = min(nonzero, key=lambda i: abs(h[i][c]))
            if piv != r:
                h[r], h[piv] = h[piv], h[r]
                u[r], u[piv] = u[piv], u[r]
            clean = True
            for i in range(r + 1, m):
                if h[i][c]:
                    row_sub(i, r, h[i][c] // h[r][c])
                    if h[i][c]:
                        clean = False
            if clean:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                row_sub(i, r, q)
        r += 1
    return tuple(map(tuple, h)), UnimodularMap(tuple(map(tuple, u)))


def hnf(a) -> IntMatrix:
    return hermite_normal_form(a)[0]


@dataclass(frozen=True)
class UnimodularMap:
    """A lattice automorphism of Z^d given by its integer matrix."""

    matrix: IntMatrix

    def __post_init__(self):
        d = det(self.matrix)
        if d not in (1, -1):
            raise ValueError(f"matrix is not unimodular (det {d})")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __call__(self, v):
        return mat_vec(self.matrix, v)

    def inverse(self) -> "UnimodularMap":
        inv = inverse(self.matrix)
        return UnimodularMap(tuple(tuple(int(x) for x in r) for r in inv))

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        return UnimodularMap(mat_mul(self.matrix, other.matrix))

    def column(self, j: int) -> IntVector:
        return tuple(r[j] for r in self.matrix)


def complete_to_basis(v) -> UnimodularMap:
    """Unimodular matrix whose last column is the primitive vector ``v``."""
    v = vec(v)
    if gcd_list(v) != 1:
        raise NotPrimitive(f"{v} is not a primitive lattice vector")
    d = len(v)
    # Reduce the reversed column so that e_d maps to the identity.
    _, u_rev = hermite_normal_form(tuple((x,) for x in reversed(v)))
    rev = list(reversed(range(d)))
    u = tuple(tuple(u_rev.matrix[rev[i]][rev[j]] for j in range(d)) for i in range(d))
    # u * v = e_d, so the inverse carries e_d back to v.
    return UnimodularMap(u).inverse()


@dataclass(frozen=True)
class QuotientProjection:
    """Coordinates on M / Zv together with a section back into M.

    ``proj`` is a (d-1) x d matrix with kernel exactly Zv mapping M onto
    Z^(d-1); ``lift`` is a d x (d-1) matrix with ``proj * lift = 1``.  The rows
    of ``proj`` are also a basis of the dual sublattice v^perp in N.
    """

    v: IntVector
    proj: IntMatrix
    lift: IntMatrix

    @property
    def dim(self) -> int:
        return len(self.v)

    def __call__(self, x):
        return mat_vec(self.proj, x)

    def lift_point(self, y):
        return mat_vec(self.lift, y)

    def dual_coordinates(self, y):
        """Coordinates of a covector ``y`` in v^perp w.r.t. the rows of ``proj``."""
        return mat_vec(transpose(self.lift), y)


def quotient_projection(v) -> QuotientProjection:
    v = vec(v)
    basis = complete_to_basis(v)
    inv = basis.inverse().matrix
    d = len(v)
    proj = tuple(inv[i] for i in range(d - 1))
    lift = tuple(tuple(basis.matrix[i][j] for j in range(d - 1)) for i in range(d))
    return QuotientProjection(v, proj, lift)


def maximal_minor_gcd(vectors) -> int:
    """gcd of the maximal minors of the k x d matrix with the given rows."""
    vectors = list(vectors)
    k = len(vectors)
    d = len(vectors[0])
    g = 0
    for cols in combinations(range(d), k):
        g = gcd(g, det([[v[c] for c in cols] for v in vectors]))
        if g == 1:
            return 1
    return g


def is_saturated_basis(vectors) -> bool:
    """Whether the vectors form a Z-basis of lin(vectors) intersected with Z^d."""
    return maximal_minor_gcd(vectors) == 1

"""Full-dimensional lattice polytopes with an exact facet description."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, Sequence

from .errors import NotFullDimensional
from .lattice import affine_rank, dot, inverse, lcm_list, neg, primitivize, rank


def vertex_sort_key(v):
    """Graded lexicographic order: L1 norm first, then coordinates."""
    return (sum(abs(x) for x in v), v)


@dataclass(frozen=True)
class Facet:
    """Facet inequality ``<normal, x> >= -level`` with a primitive normal.

    ``vertices`` are indices into the owning polytope's vertex list.  When the
    origin is interior the level is positive and :attr:`eta` is the rational
    inner normal taking the value -1 on the facet.
    """

    normal: tuple
    level: int
    vertices: tuple

    def slack(self, x):
        return dot(self.normal, x) + self.level

    def contains(self, x) -> bool:
        return self.slack(x) == 0

    @property
    def eta(self):
        return tuple(Fraction(a, self.level) for a in self.normal)

    def pairing(self, x):
        """``<eta_F, x>``; the facet itself sits at value -1."""
        return Fraction(dot(self.normal, x), self.level)


@dataclass(frozen=True)
class Ridge:
    facets: tuple
    vertices: tuple


def _independent_subset(vectors):
    """Greedy choice of linearly independent vectors (indices, in order)."""
    chosen = []
    basis = []  # reduced rows with their pivot column
    for idx, vec in enumerate(vectors):
        row = [Fraction(x) for x in vec]
        for piv, b in basis:
            if row[piv] != 0:
                f = row[piv] / b[piv]
                row = [x - f * y for x, y in zip(row, b)]
        piv = next((i for i, x in enumerate(row) if x != 0), None)
        if piv is not None:
            basis.append((piv, row))
            chosen.append(idx)
    return chosen


def _popcount(x: int) -> int:
    return bin(x).count("1")


def double_description(points: Sequence[tuple], d: int):
    """Facet inequalities of conv(points) by the double description method.

    Works on the cone of valid inequalities ``(n, c)`` with ``<n, x> + c >= 0``
    for every point; its extreme rays are exactly the facets.  Each ray carries
    a bitmask of the points it is tight on.  Returns a list of
    ``(normal, level, mask)``.
    """
    hom = [tuple(p) + (1,) for p in points]
    base = _independent_subset(hom)
    if len(base) < d + 1:
        raise NotFullDimensional(
            f"points span an affine space of dimension {len(base) - 1} < {d}")
    base = base[: d + 1]
    inv = inverse([hom[i] for i in base])
    rays = []
    masks = []
    base_mask = 0
    for i in base:
        base_mask |= 1 << i
    for j in range(d + 1):
        col = [inv[i][j] for i in range(d + 1)]
        den = lcm_list(x.denominator for x in col)
        rays.append(primitivize([x * den for x in col])[0])
        masks.append(base_mask & ~(1 << base[j]))

    in_base = set(base)
    for k, a in enumerate(hom):
        if k in in_base:
            continue
        bit = 1 << k
        vals = [dot(a, r) for r in rays]
        negs = [i for i, s in enumerate(vals) if s < 0]
        if not negs:
            for i, s in enumerate(vals):
                if s == 0:
                    masks[i] |= bit
            continue
        poss = [i for i, s in enumerate(vals) if s > 0]
        new_rays = []
        new_masks = []
        for i, s in enumerate(vals):
            if s > 0:
                new_rays.append(rays[i])
                new_masks.append(masks[i])
            elif s == 0:
                new_rays.append(rays[i])
                new_masks.append(masks[i] | bit)
        nrays = len(rays)
        for p in poss:
            for q in negs:
                common = masks[p] & masks[q]
                if _popcount(common) < d - 1:
                    continue
                adjacent = True
                for r in range(nrays):
                    if r != p and r != q and masks[r] & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                sp, sq = vals[p], vals[q]
                comb = tuple(sp * y - sq * x for x, y in zip(rays[p], rays[q]))
                new_rays.append(primitivize(comb)[0])
                new_masks.append(common | bit)
        rays, masks = new_rays, new_masks
    return [(r[:d], r[d], m) for r, m in zip(rays, masks)]


class Polytope:
    """Convex hull of finitely many lattice points, full dimensional.

    The vertex list is irredundant and sorted in graded lexicographic order;
    the facet list is computed once at construction.  Instances are treated as
    immutable values: equality and hashing use the vertex set.
    """

    is_lattice = True

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = sorted({tuple(int(x) for x in p) for p in points}, key=vertex_sort_key)
        if not pts:
            raise NotFullDimensional("empty point set")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise ValueError("points have mixed dimensions")
        if d == 0:
            raise NotFullDimensional("zero-dimensional ambient space")
        raw = double_description(pts, d)
        is_vertex = []
        for idx in range(len(pts)):
            bit = 1 << idx
            normals = [n for n, _, m in raw if m & bit]
            is_vertex.append(len(normals) >= d and rank(normals) == d)
        vertices = tuple(p for p, keep in zip(pts, is_vertex) if keep)
        position = {}
        for idx, keep in enumerate(is_vertex):
            if keep:
                position[idx] = len(position)
        facets = []
        for n, c, m in raw:
            inc = tuple(sorted(position[i] for i in position if m >> i & 1))
            facets.append(Facet(n, c, inc))
        facets.sort(key=lambda f: (f.vertices, f.normal))
        self.dim = d
        self.vertices = vertices
        self.facets = tuple(facets)
        self._index = {v: i for i, v in enumerate(vertices)}
        self._lattice_points = None
        self._ridges = None

    # -- basic protocol -------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Polytope(dim={self.dim}, vertices={list(self.vertices)})"

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def vertex_index(self, v) -> int | None:
        return self._index.get(tuple(v))

    def is_vertex(self, v) -> bool:
        return tuple(v) in self._index

    # -- incidence ------------------------------------------------------
    def contains(self, x) -> bool:
        return all(f.slack(x) >= 0 for f in self.facets)

    def tight_facets(self, x) -> tuple:
        """Indices of the facets containing ``x`` (assumed to lie in P)."""
        return tuple(i for i, f in enumerate(self.facets) if f.slack(x) == 0)

    def on_boundary(self, x) -> bool:
        return self.contains(x) and any(f.slack(x) == 0 for f in self.facets)

    def in_interior(self, x) -> bool:
        return all(f.slack(x) > 0 for f in self.facets)

    def facet_vertices(self, i: int) -> list:
        return [self.vertices[j] for j in self.facets[i].vertices]

    def share_facet(self, x, y) -> bool:
        return any(f.slack(x) == 0 and f.slack(y) == 0 for f in self.facets)

    def minimal_face(self, points) -> tuple:
        """Vertex indices of the smallest face containing all ``points``."""
        tight = [f for f in self.facets if all(f.slack(p) == 0 for p in points)]
        return tuple(j for j, v in enumerate(self.vertices)
                     if all(f.slack(v) == 0 for f in tight))

    def face_dimension(self, vertex_indices) -> int:
        return affine_rank([self.vertices[j] for j in vertex_indices])

    # -- lattice points -------------------------------------------------
    def bounding_box(self):
        lo = tuple(min(v[i] for v in self.vertices) for i in range(self.dim))
        hi = tuple(max(v[i] for v in self.vertices) for i in range(self.dim))
        return lo, hi

    def lattice_points(self) -> tuple:
        """All lattice points of P by bounding-box enumeration."""
        if self._lattice_points is None:
            lo, hi = self.bounding_box()
            ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
            rows = [(f.normal, f.level) for f in self.facets]
            pts = [x for x in cartesian(*ranges)
                   if all(dot(n, x) + c >= 0 for n, c in rows)]
            # Benign race: concurrent callers store equal tuples.
            self._lattice_points = tuple(sorted(pts, key=vertex_sort_key))
        return self._lattice_points

    def interior_points(self) -> tuple:
        return tuple(x for x in self.lattice_points() if self.in_interior(x))

    def boundary_points(self) -> tuple:
        return tuple(x for x in self.lattice_points() if not self.in_interior(x))

    def facet_points(self, i: int) -> tuple:
        f = self.facets[i]
        return tuple(x for x in self.lattice_points() if f.slack(x) == 0)

    # -- combinatorics --------------------------------------------------
    def is_simplicial(self) -> bool:
        return all(len(f.vertices) == self.dim for f in self.facets)

    def is_simplex(self) -> bool:
        return self.n_vertices == self.dim + 1

    def is_empty_polytope(self) -> bool:
        return set(self.lattice_points()) == set(self.vertices)

    def is_centrally_symmetric(self) -> bool:
        return all(neg(v) in self._index for v in self.vertices)

    def origin_interior(self) -> bool:
        return all(f.level > 0 for f in self.facets)

    def ridges(self) -> tuple:
        """Pairs of facets meeting in a face of dimension d - 2."""
        if self._ridges is None:
            out = []
            sets = [set(f.vertices) for f in self.facets]
            for i in range(len(self.facets)):
                for j in range(i + 1, len(self.facets)):
                    common = sets[i] & sets[j]
                    if len(common) < self.dim - 1:
                        continue
                    common = tuple(sorted(common))
                    if self.face_dimension(common) == self.dim - 2:
                        out.append(Ridge((i, j), common))
            self._ridges = tuple(out)
        return self._ridges

    def neighbours(self, i: int) -> list:
        """Facets meeting facet ``i`` in a ridge, with the ridge vertex set."""
        out = []
        for r in self.ridges():
            a, b = r.facets
            if a == i:
                out.append((b, r.vertices))
            elif b == i:
                out.append((a, r.vertices))
        return out


class RationalPolytope:
    """Polytope with rational vertices, stored as ``(1/k) * Q`` for lattice Q.

    Used for duals of non-reflexive polytopes and for dual slices.
    """

    is_lattice = False

    def __init__(self, points):
        pts = [tuple(Fraction(x) for x in p) for p in points]
        den = lcm_list(x.denominator for p in pts for x in p) if pts else 1
        self.scaled = Polytope([tuple(int(x * den) for x in p) for p in pts])
        self.denominator = den
        self.dim = self.scaled.dim
        self.vertices = tuple(tuple(Fraction(x, den) for x in v) for v in self.scaled.vertices)
        self.is_lattice = all(x.denominator == 1 for v in self.vertices for x in v)

    def __repr__(self):
        return f"RationalPolytope(dim={self.dim}, vertices={[tuple(map(str, v)) for v in self.vertices]})"

    def vertex_set(self):
        return frozenset(self.vertices)

    def contains(self, x) -> bool:
        return self.scaled.contains(tuple(Fraction(a) * self.denominator for a in x))

    def as_lattice_polytope(self) -> Polytope:
        if not self.is_lattice:
            raise ValueError("polytope has non-integral vertices")
        return Polytope([tuple(int(x) for x in v) for v in self.vertices])


def hull(points) -> Polytope:
    return Polytope(points)


def facets(p: Polytope) -> tuple:
    return p.facets


def contains(p: Polytope, x) -> bool:
    return p.contains(x)


def lattice_points(p: Polytope) -> tuple:
    return p.lattice_points()


def is_simplicial(p: Polytope) -> bool:
    return p.is_simplicial()


def is_simplex(p: Polytope) -> bool:
    return p.is_simplex()


def is_empty_polytope(p: Polytope) -> bool:
    return p.is_empty_polytope()


def ridges(p: Polytope) -> tuple:
    return p.ridges()


def product(p1: Polytope, p2: Polytope) -> Polytope:
    """Cartesian product in the direct sum lattice."""
    return Polytope([a + b for a in p1.vertices for b in p2.vertices])


def free_sum(p1: Polytope, p2: Polytope) -> Polytope:
    """conv(P1 x {0}, {0} x P2); the dual of a product of polytopes."""
    z1 = (0,) * p1.dim
    z2 = (0,) * p2.dim
    return Polytope([a + z2 for a in p1.vertices] + [z1 + b for b in p2.vertices])


def is_lattice_point(x) -> bool:
    return all(Fraction(a).denominator == 1 for a in x)

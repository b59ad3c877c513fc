"""Fano-type predicates, duality, Gorenstein index and discrepancy."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import NotFano, NotReflexive, OriginNotInterior
from .lattice import (
    UnimodularMap,
    complete_to_basis,
    det,
    dot,
    gcd_list,
    lcm_list,
    mat_vec,
    neg,
    sub,
)
from .polytope import Polytope, RationalPolytope

FLAG_NAMES = (
    "fano",
    "canonical",
    "terminal",
    "semi_terminal",
    "reflexive",
    "smooth",
    "simplicial",
    "centrally_symmetric",
)


def is_fano(p: Polytope) -> bool:
    return p.origin_interior() and all(gcd_list(v) == 1 for v in p.vertices)


def _require_fano(p: Polytope):
    if not is_fano(p):
        raise NotFano("polytope is not a Fano polytope")


def _require_origin(p: Polytope):
    if not p.origin_interior():
        raise OriginNotInterior("the origin is not an interior point")


def dual(p: Polytope):
    """Dual polytope ``{y : <x, y> >= -1 for x in P}``.

    Its vertices are the rational normals eta_F.  A :class:`Polytope` is
    returned when all of them are integral, a :class:`RationalPolytope`
    (``is_lattice`` false) otherwise.
    """
    _require_origin(p)
    if all(f.level == 1 for f in p.facets):
        return Polytope([f.normal for f in p.facets])
    return RationalPolytope([f.eta for f in p.facets])


def is_reflexive(p: Polytope) -> bool:
    _require_fano(p)
    return all(f.level == 1 for f in p.facets)


def require_reflexive(p: Polytope):
    if not (is_fano(p) and all(f.level == 1 for f in p.facets)):
        raise NotReflexive("polytope is not reflexive")


def is_canonical(p: Polytope) -> bool:
    _require_origin(p)
    origin = (0,) * p.dim
    return p.interior_points() == (origin,)


def is_terminal(p: Polytope) -> bool:
    _require_origin(p)
    origin = (0,) * p.dim
    return set(p.lattice_points()) == set(p.vertices) | {origin}


def semi_terminal_witness(p: Polytope):
    """First pair of vertices ``v ~ w`` whose segment carries an extra lattice point."""
    for i, v in enumerate(p.vertices):
        for j in range(i + 1, p.n_vertices):
            w = p.vertices[j]
            if p.share_facet(v, w) and gcd_list(sub(w, v)) != 1:
                return (v, w)
    return None


def is_semi_terminal(p: Polytope) -> bool:
    """Every vertex-to-star-vertex segment has exactly two lattice points.

    For a vertex ``v`` the vertices of the link of ``v`` are exactly the other
    vertices sharing a facet with ``v``, so the check runs over those pairs.
    """
    _require_fano(p)
    return semi_terminal_witness(p) is None


def smooth_witness(p: Polytope):
    for i, f in enumerate(p.facets):
        if len(f.vertices) != p.dim or abs(det(p.facet_vertices(i))) != 1:
            return i
    return None


def is_smooth(p: Polytope) -> bool:
    _require_fano(p)
    return smooth_witness(p) is None


def gorenstein_index(p: Polytope) -> int:
    """Least k with k P* a lattice polytope, i.e. lcm of the facet levels."""
    _require_fano(p)
    return lcm_list(f.level for f in p.facets)


def is_centrally_symmetric(p: Polytope) -> bool:
    return p.is_centrally_symmetric()


def facet_cone_levels(p: Polytope, i: int):
    """Lattice points of pos(F) with facet-functional level in (0, 2].

    Yields ``(point, level)`` where the level is ``<u_F, x>`` with ``u_F``
    equal to +1 on the vertices of F.  The truncated cone is the pyramid
    ``conv(0, 2F)``.
    """
    f = p.facets[i]
    origin = (0,) * p.dim
    apex = Polytope([origin] + [tuple(2 * a for a in v) for v in p.facet_vertices(i)])
    for x in apex.lattice_points():
        if x != origin:
            yield x, Fraction(-dot(f.normal, x), f.level)


def discrepancy(p: Polytope) -> Fraction:
    """``-1 + min <u_F, x>`` over non-generator lattice points x of facet cones."""
    _require_fano(p)
    best = None
    for i, f in enumerate(p.facets):
        gens = set(p.facet_vertices(i))
        for x, level in facet_cone_levels(p, i):
            if x in gens:
                continue
            if best is None or level < best:
                best = level
    return best - 1


def embed_in_unit_cube(p: Polytope):
    """Unimodular map sending P into [-1, 1]^d, or ``None``.

    The rows of such a map are lattice points b_i of P* with -b_i in P*, and
    the search runs over all d-subsets of the nonzero lattice points of P*
    that form a basis, so ``None`` means no embedding exists.
    """
    if not (is_fano(p) and all(f.level == 1 for f in p.facets)):
        raise NotReflexive("embedding search needs a reflexive polytope")
    q = dual(p)
    origin = (0,) * p.dim
    candidates = [y for y in q.lattice_points()
                  if y != origin and all(abs(dot(y, v)) <= 1 for v in p.vertices)]
    for rows in combinations(candidates, p.dim):
        if abs(det(rows)) == 1:
            return UnimodularMap(tuple(rows))
    return None


def root_local_basis(p: Polytope, facet_index: int, m) -> UnimodularMap:
    """Basis of M with last vector m and the facet inside ``x_d = 1``.

    Returns the coordinate change (inverse of the basis matrix); after
    applying it every lattice point of the facet has last coordinate 1.
    """
    require_reflexive(p)
    f = p.facets[facet_index]
    if f.slack(m) != 0:
        raise ValueError(f"{m} is not on facet {facet_index}")
    basis = complete_to_basis(m)
    # Shear so the remaining basis vectors lie in eta_F^perp.
    d = p.dim
    cols = [basis.column(j) for j in range(d)]
    fixed = []
    for j in range(d - 1):
        c = cols[j]
        t = dot(f.normal, c)  # <eta_F, m> = -1
        fixed.append(tuple(a + t * b for a, b in zip(c, m)))
    fixed.append(tuple(m))
    matrix = tuple(tuple(fixed[j][i] for j in range(d)) for i in range(d))
    return UnimodularMap(matrix).inverse()


@dataclass
class PredicateReport:
    flags: dict
    gorenstein_index: int | None
    discrepancy: Fraction | None
    witnesses: dict = field(default_factory=dict)
    dim: int = 0
    n_vertices: int = 0
    n_facets: int = 0
    n_lattice_points: int = 0

    def as_dict(self) -> dict:
        out = {
            "dim": self.dim,
            "vertices": self.n_vertices,
            "facets": self.n_facets,
            "lattice_points": self.n_lattice_points,
        }
        out.update(self.flags)
        out["gorenstein_index"] = self.gorenstein_index
        out["discrepancy"] = None if self.discrepancy is None else str(self.discrepancy)
        for k, w in self.witnesses.items():
            out[f"witness.{k}"] = _fmt(w)
        return out

    def to_text(self) -> str:
        lines = []
        for k, v in self.as_dict().items():
            if isinstance(v, bool):
                v = "true" if v else "false"
            elif v is None:
                v = "none"
            lines.append(f"{k}={v}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def _fmt(obj):
    if isinstance(obj, tuple) and obj and isinstance(obj[0], tuple):
        return " ".join(_fmt(x) for x in obj)
    if isinstance(obj, tuple):
        return "(" + ",".join(str(x) for x in obj) + ")"
    return str(obj)


def predicate_report(p: Polytope) -> PredicateReport:
    flags = dict.fromkeys(FLAG_NAMES, False)
    wit = {}
    origin_in = p.origin_interior()
    flags["simplicial"] = p.is_simplicial()
    if not flags["simplicial"]:
        i = next(i for i, f in enumerate(p.facets) if len(f.vertices) != p.dim)
        wit["simplicial"] = tuple(p.facet_vertices(i))
    flags["centrally_symmetric"] = p.is_centrally_symmetric()
    if not flags["centrally_symmetric"]:
        wit["centrally_symmetric"] = next(v for v in p.vertices if not p.is_vertex(neg(v)))
    if origin_in:
        origin = (0,) * p.dim
        extra = [x for x in p.interior_points() if x != origin]
        flags["canonical"] = not extra
        if extra:
            wit["canonical"] = extra[0]
        non_vertex = [x for x in p.boundary_points() if not p.is_vertex(x)]
        flags["terminal"] = flags["canonical"] and not non_vertex
        if flags["canonical"] and non_vertex:
            wit["terminal"] = non_vertex[0]
    else:
        wit["fano"] = "origin not interior"
    imprimitive = [v for v in p.vertices if gcd_list(v) != 1]
    flags["fano"] = origin_in and not imprimitive
    if origin_in and imprimitive:
        wit["fano"] = imprimitive[0]
    index = disc = None
    if flags["fano"]:
        index = gorenstein_index(p)
        disc = discrepancy(p)
        flags["reflexive"] = index == 1
        if index != 1:
            i = next(i for i, f in enumerate(p.facets) if f.level != 1)
            wit["reflexive"] = tuple(p.facets[i].eta)
        st = semi_terminal_witness(p)
        flags["semi_terminal"] = st is None
        if st is not None:
            wit["semi_terminal"] = st
        sw = smooth_witness(p)
        flags["smooth"] = sw is None
        if sw is not None:
            wit["smooth"] = tuple(p.facet_vertices(sw))
    return PredicateReport(
        flags=flags,
        gorenstein_index=index,
        discrepancy=disc,
        witnesses=wit,
        dim=p.dim,
        n_vertices=p.n_vertices,
        n_facets=len(p.facets),
        n_lattice_points=len(p.lattice_points()),
    )


def apply_map(u: UnimodularMap, p: Polytope) -> Polytope:
    return Polytope([mat_vec(u.matrix, v) for v in p.vertices])

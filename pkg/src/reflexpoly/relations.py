"""Pairs of boundary lattice points: trichotomy, primitive relations, the graph W(P)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .errors import NotOnBoundary, NotSimplicial, NotVertex, WrongClass
from .lattice import add, is_saturated_basis, lattice_length, neg
from .polytope import Polytope
from .reflexive import require_reflexive
from .report import CheckReport, fmt_point


class PairClass(Enum):
    SIM = "Sim"
    ANTIPODAL = "Antipodal"
    SUM = "Sum"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PrimitiveRelation:
    """z = a v + b w with z on the boundary, z ~ v and z ~ w."""

    v: tuple
    w: tuple
    z: tuple
    a: int
    b: int

    def __str__(self):
        return f"Sum z={fmt_point(self.z)} a={self.a} b={self.b}"


def _require_boundary(p: Polytope, *points):
    for x in points:
        if len(x) != p.dim or not p.on_boundary(x) or any(int(a) != a for a in x):
            raise NotOnBoundary(f"{fmt_point(x)} is not a boundary lattice point")


def trichotomy_flags(p: Polytope, v, w) -> tuple:
    """The three statements, evaluated independently of each other."""
    sim = p.share_facet(v, w)
    antipodal = add(v, w) == (0,) * p.dim
    s = add(v, w)
    on_boundary = p.on_boundary(s) and any(s)
    return sim, antipodal, on_boundary


def classify_pair(p: Polytope, v, w) -> PairClass:
    require_reflexive(p)
    v, w = tuple(v), tuple(w)
    _require_boundary(p, v, w)
    if v == w:
        raise ValueError("the two points must differ")
    if p.share_facet(v, w):
        return PairClass.SIM
    if add(v, w) == (0,) * p.dim:
        return PairClass.ANTIPODAL
    if not p.on_boundary(add(v, w)):
        raise AssertionError(f"v + w = {fmt_point(add(v, w))} is not on the boundary")
    return PairClass.SUM


def primitive_relation(p: Polytope, v, w) -> PrimitiveRelation:
    """March from v + w along the boundary until the point is adjacent to both.

    While z ~ v only, w is added (z = v + b w); while z ~ w only, v is added.
    The facet containing v and v + w contains every v + k w still in P, and
    it has finitely many lattice points, so the march stops.
    """
    v, w = tuple(v), tuple(w)
    cls = classify_pair(p, v, w)
    if cls is not PairClass.SUM:
        raise WrongClass(f"pair is of class {cls}, not Sum")
    a, b = 1, 1
    z = add(v, w)
    for _ in range(len(p.lattice_points()) + 1):
        if not p.on_boundary(z):
            break
        near_v = p.share_facet(z, v)
        near_w = p.share_facet(z, w)
        if near_v and near_w:
            return PrimitiveRelation(v, w, z, a, b)
        if near_v:
            z, b = add(z, w), b + 1
        elif near_w:
            z, a = add(z, v), a + 1
        else:
            break
    raise AssertionError(f"no primitive relation found for {fmt_point(v)}, {fmt_point(w)}")


def relation_candidates(p: Polytope, v, w) -> list:
    """All (a, b) in a box with a v + b w on the boundary and adjacent to v and w.

    The box side is the lattice diameter of P, which bounds any a, b for
    which a v + b w can still lie in P.
    """
    lo, hi = p.bounding_box()
    bound = max(h - l for l, h in zip(lo, hi)) + 1
    out = []
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            z = tuple(a * x + b * y for x, y in zip(v, w))
            if p.on_boundary(z) and p.share_facet(z, v) and p.share_facet(z, w):
                out.append((a, b))
    return out


def _relint_of_facet(p: Polytope, x, y) -> bool:
    mid = tuple(Fraction(a + b, 2) for a, b in zip(x, y))
    return len(p.tight_facets(mid)) == 1


def _in_edge(p: Polytope, x, y) -> bool:
    face = p.minimal_face([x, y])
    return p.face_dimension(face) == 1


def verify_prim_properties(p: Polytope, v, w, relation: PrimitiveRelation | None = None,
                           check_unique: bool = True) -> CheckReport:
    rel = relation or primitive_relation(p, v, w)
    v, w, z, a, b = rel.v, rel.w, rel.z, rel.a, rel.b
    rep = CheckReport()
    rep.add("prim.basis", is_saturated_basis([v, w]), "v, w not a basis of lin(v,w) cap M")
    if check_unique:
        cands = relation_candidates(p, v, w)
        rep.add("prim.unique", cands == [(a, b)], f"candidates {cands}")

    ok = (a == 1 or b == 1) and a == lattice_length(w, z) and b == lattice_length(v, z)
    detail = f"a={a} b={b}"
    if ok:
        for f in p.facets:
            if f.slack(v) == 0 and f.slack(z) == 0 and f.pairing(w) != Fraction(a - 1, b):
                ok, detail = False, f"<eta_F, w> = {f.pairing(w)} on facet {f.normal}"
                break
    rep.add("prim.i", ok, "" if ok else detail)

    ok, detail = True, ""
    for point in (z, add(v, w)):
        for f in p.facets:
            if f.slack(point) == 0 and (f.slack(v) == 0) == (f.slack(w) == 0):
                ok, detail = False, f"facet {f.normal} at {fmt_point(point)}"
                break
    rep.add("prim.ii", ok, detail)

    ridge_pairs = {r.facets for r in p.ridges()}
    ok, detail = True, ""
    for i, f in enumerate(p.facets):
        if f.slack(v) != 0 or f.slack(z) != 0:
            continue
        if not any(g.slack(w) == 0 and g.slack(z) == 0 and tuple(sorted((i, j))) in ridge_pairs
                   for j, g in enumerate(p.facets)):
            ok, detail = False, f"no partner facet for facet {f.normal}"
            break
    rep.add("prim.iii", ok, detail)

    # (iv) in both orientations: roles of (v, b) and (w, a) swap.
    applies = False
    ok = True
    for x, y, coeff in ((v, w, b), (w, v, a)):
        if p.is_vertex(z) and coeff == 1 and _relint_of_facet(p, x, z):
            applies = True
            if not _in_edge(p, y, z):
                ok = False
    rep.add("prim.iv", ok if applies else None, "" if ok else "[w,z] not in an edge")
    return rep


def boundary_pairs(p: Polytope):
    return combinations(p.boundary_points(), 2)


def sweep_pairs(p: Polytope) -> dict:
    """Check trichotomy and prim properties on every boundary pair.

    Returns counters and the first failures (empty when all checks hold).
    """
    require_reflexive(p)
    stats = {"pairs": 0, "sim": 0, "antipodal": 0, "sum": 0, "failures": []}
    for v, w in boundary_pairs(p):
        stats["pairs"] += 1
        flags = trichotomy_flags(p, v, w)
        if sum(flags) != 1:
            stats["failures"].append((v, w, f"trichotomy flags {flags}"))
            continue
        cls = classify_pair(p, v, w)
        stats[cls.name.lower()] += 1
        if cls is PairClass.SUM:
            rep = verify_prim_properties(p, v, w)
            for c in rep.failures():
                stats["failures"].append((v, w, f"{c.name}: {c.detail}"))
    return stats


# -- the graph W(P) ---------------------------------------------------------

@dataclass
class BoundaryGraph:
    nodes: tuple
    adjacency: dict
    _dist: dict = field(default=None, repr=False)

    def neighbours(self, x) -> tuple:
        return self.adjacency[x]

    def _bfs(self, src) -> dict:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def distances(self) -> dict:
        if self._dist is None:
            self._dist = {x: self._bfs(x) for x in self.nodes}
        return self._dist

    def distance(self, x, y):
        return self.distances()[x].get(y)

    def diameter(self):
        best = 0
        for x, dist in self.distances().items():
            if len(dist) != len(self.nodes):
                return None
            best = max(best, max(dist.values()))
        return best

    def far_pairs(self, k: int = 3) -> list:
        out = []
        for i, x in enumerate(self.nodes):
            dist = self.distances()[x]
            for y in self.nodes[i + 1:]:
                if dist.get(y, k) >= k:
                    out.append((x, y))
        return out

    def n_edges(self) -> int:
        return sum(len(v) for v in self.adjacency.values()) // 2

    def to_text(self) -> str:
        lines = [f"{fmt_point(x)}: " + ", ".join(fmt_point(y) for y in self.adjacency[x])
                 for x in self.nodes]
        return "\n".join(lines) + "\n"


def boundary_graph(p: Polytope, vertices_only: bool = False) -> BoundaryGraph:
    require_reflexive(p)
    nodes = tuple(p.vertices) if vertices_only else p.boundary_points()
    node_set = set(nodes)
    adj = {x: set() for x in nodes}
    for i in range(len(p.facets)):
        on = [x for x in p.facet_points(i) if x in node_set]
        for x in on:
            adj[x].update(on)
    for x in nodes:
        adj[x].discard(x)
    order = {x: k for k, x in enumerate(nodes)}
    adjacency = {x: tuple(sorted(adj[x], key=order.get)) for x in nodes}
    return BoundaryGraph(nodes, adjacency)


def graph_check(p: Polytope) -> CheckReport:
    rep = CheckReport()
    for name, only in (("graph", False), ("graph.vertices", True)):
        g = boundary_graph(p, vertices_only=only)
        diam = g.diameter()
        rep.add(f"{name}.diameter", diam is not None and diam <= 3, f"diameter {diam}")
        bad = [(x, y) for x, y in g.far_pairs(3) if add(x, y) != (0,) * p.dim]
        rep.add(f"{name}.distance3_symmetric", not bad,
                f"{fmt_point(bad[0][0])} {fmt_point(bad[0][1])}" if bad else "")
        rep.values[f"{name}.diameter_value"] = diam
    return rep


def facet_pair_check(p: Polytope):
    """Two facets are parallel, share a vertex, or both meet a third facet.

    Returns the first offending pair of facet indices, or ``None``.
    """
    require_reflexive(p)
    sets = [set(f.vertices) for f in p.facets]
    n = len(sets)
    for i, j in combinations(range(n), 2):
        if p.facets[i].normal == neg(p.facets[j].normal):
            continue
        if sets[i] & sets[j]:
            continue
        if any(sets[k] & sets[i] and sets[k] & sets[j] for k in range(n) if k not in (i, j)):
            continue
        return (i, j)
    return None


# -- vertices outside a star -------------------------------------------------

def non_star_vertex_count(p: Polytope, v) -> int:
    require_reflexive(p)
    if not p.is_simplicial():
        raise NotSimplicial("polytope is not simplicial")
    v = tuple(v)
    if not p.is_vertex(v):
        raise NotVertex(f"{fmt_point(v)} is not a vertex")
    return sum(1 for w in p.vertices if not p.share_facet(v, w))


def casa_bound_check(p: Polytope) -> CheckReport:
    rep = CheckReport()
    worst = 0
    ok, detail = True, ""
    for v in p.vertices:
        k = non_star_vertex_count(p, v)
        worst = max(worst, k)
        if k > 3 or (k == 3 and not p.is_vertex(neg(v))):
            ok, detail = False, f"vertex {fmt_point(v)} has {k} vertices outside its star"
            break
    rep.add("casa.non_star_bound", ok, detail)
    rep.values["casa.max_non_star"] = worst
    _casa_projection_bounds(p, rep)
    return rep


def _casa_projection_bounds(p: Polytope, rep: CheckReport):
    """Vertex and boundary counts against lattice points of projections P_v."""
    from .projection import project

    n = p.n_vertices
    n_boundary = len(p.boundary_points())
    ok = [True, True, True]
    detail = ["", "", ""]
    case2_applies = False
    images = {v: project(p, v).image for v in p.vertices}
    for v in p.vertices:
        pv = images[v]
        bound = len(pv.boundary_points()) + 4
        if n > bound or (n == bound and not p.is_vertex(neg(v))):
            ok[0], detail[0] = False, f"v = {fmt_point(v)}: {n} vertices, bound {bound}"
        others = [w for w in p.vertices if w != neg(v) and w != v and not p.share_facet(v, w)]
        for w in others:
            lo = len(pv.lattice_points()) + len(images[w].interior_points())
            if not lo <= n_boundary <= lo + 2 or (
                    n_boundary == lo + 2 and not p.contains(neg(v))):
                ok[1], detail[1] = False, f"v = {fmt_point(v)}, w = {fmt_point(w)}"
        if not others:
            case2_applies = True
            if n > len(pv.boundary_points()) + 2:
                ok[2], detail[2] = False, f"v = {fmt_point(v)}"
    rep.add("casa.projection_bound", ok[0], detail[0])
    rep.add("casa.case1", ok[1], detail[1])
    rep.add("casa.case2", ok[2] if case2_applies else None, detail[2])


def max_facet_points(p: Polytope) -> int:
    return max(len(p.facet_points(i)) for i in range(len(p.facets)))


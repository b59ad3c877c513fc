"""Stars, links and the projection of a reflexive polytope along a boundary point."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import NotOnBoundary, NotPrimitive, NotVertex
from .lattice import (
    QuotientProjection,
    affine_rank,
    det,
    dot,
    gcd_list,
    mat_vec,
    neg,
    quotient_projection,
    transpose,
)
from .polytope import Polytope, RationalPolytope
from .reflexive import dual, is_canonical, is_fano, is_semi_terminal, is_terminal, require_reflexive
from .report import CheckReport, fmt_point


def _require_boundary_point(p: Polytope, x):
    x = tuple(x)
    if len(x) != p.dim or not p.on_boundary(x):
        raise NotOnBoundary(f"{fmt_point(x)} is not a boundary point of the polytope")
    return x


def _as_int_if_integral(x):
    if all(Fraction(a).denominator == 1 for a in x):
        return tuple(int(a) for a in x)
    return tuple(Fraction(a) for a in x)


@dataclass(frozen=True)
class Star:
    """st(x): the facets containing x and the lattice points on them."""

    point: tuple
    facets: tuple
    points: tuple


def star(p: Polytope, x) -> Star:
    x = _require_boundary_point(p, x)
    fs = p.tight_facets(x)
    pts = tuple(y for y in p.boundary_points() if any(p.facets[i].slack(y) == 0 for i in fs))
    return Star(x, fs, pts)


def in_star(p: Polytope, x, y) -> bool:
    """x ~ y: some facet contains both."""
    return p.share_facet(x, y)


def is_away(p: Polytope, y, x) -> bool:
    """y is away from x: some facet contains y but not x."""
    return any(f.slack(y) == 0 and f.slack(x) != 0 for f in p.facets)


def ray_exit(p: Polytope, x, direction):
    """Largest t with x + t * direction in P (``None`` if unbounded)."""
    best = None
    for f in p.facets:
        rate = dot(f.normal, direction)
        if rate < 0:
            t = Fraction(f.slack(x), -rate)
            if best is None or t < best:
                best = t
    return best


def is_away_local(p: Polytope, y, x) -> bool:
    """Local criterion: x + t (y - x) leaves P for every t > 1."""
    d = tuple(a - b for a, b in zip(y, x))
    return ray_exit(p, x, d) <= 1


def link_points(p: Polytope, x) -> tuple:
    """Lattice points of the link of x: points of st(x) away from x."""
    s = star(p, x)
    return tuple(y for y in s.points if y != s.point and is_away(p, y, s.point))


@dataclass
class ProjectionResult:
    """P_v with its quotient coordinates and the lifts of its lattice points."""

    direction: tuple
    quotient: QuotientProjection
    image: Polytope
    lift_table: dict
    source: Polytope = field(repr=False, compare=False, default=None)

    def project(self, x):
        return self.quotient(x)

    def rho(self, y):
        """Preimage of y in U: the last point of P on the line over y."""
        return _rho(self.source, self.quotient, y)


def _rho(p: Polytope, q: QuotientProjection, y):
    base = q.lift_point(y)
    t = ray_exit(p, base, q.v)
    x = tuple(a + t * b for a, b in zip(base, q.v))
    return _as_int_if_integral(x)


def project(p: Polytope, v) -> ProjectionResult:
    """P_v = Pi_v(P) in the coordinates of quotient_projection(v)."""
    v = _require_boundary_point(p, v)
    if gcd_list(v) != 1:
        raise NotPrimitive(f"{fmt_point(v)} is not primitive")
    q = quotient_projection(v)
    image = Polytope([q(x) for x in p.vertices])
    table = {y: _rho(p, q, y) for y in image.lattice_points()}
    return ProjectionResult(v, q, image, table, source=p)


# -- the projection claims --------------------------------------------------

def _face_vertices(p: Polytope, normal, level) -> tuple:
    return tuple(j for j, x in enumerate(p.vertices) if dot(normal, x) + level == 0)


def _midpoint(a, b):
    return tuple(Fraction(x + y, 2) for x, y in zip(a, b))


def dual_slice(p: Polytope, v) -> RationalPolytope:
    """P* cut with v^perp, in the coordinates dual to quotient_projection(v).

    The slice of conv(V) by a hyperplane is the hull of the vertices on the
    hyperplane and of the crossing points of segments between vertices on
    opposite sides, so no facet description of P* is needed.
    """
    q = quotient_projection(v)
    etas = [f.eta for f in p.facets]
    vals = [dot(y, v) for y in etas]
    pts = [y for y, s in zip(etas, vals) if s == 0]
    for (y1, s1), (y2, s2) in combinations(zip(etas, vals), 2):
        if s1 * s2 < 0:
            t = s1 / (s1 - s2)
            pts.append(tuple(a + t * (b - a) for a, b in zip(y1, y2)))
    return RationalPolytope([q.dual_coordinates(y) for y in pts])


def verify_projection_claims(p: Polytope, v) -> CheckReport:
    require_reflexive(p)
    v = _require_boundary_point(p, v)
    res = project(p, v)
    q, pv = res.quotient, res.image
    d = p.dim
    rep = CheckReport()
    rep.values["proj.direction"] = fmt_point(v)
    rep.values["proj.image_vertices"] = pv.n_vertices

    st = star(p, v)
    star_set = set(st.points)
    links = [y for y in st.points if y != v and is_away(p, y, v)]
    link_vertices = [x for x in p.vertices if x != v and p.share_facet(x, v)]

    # (0) the image is a lattice polytope with 0 inside and vertices from V(P).
    projected = {q(x) for x in p.vertices}
    ok0 = pv.origin_interior() and all(w in projected for w in pv.vertices)
    rep.add("proj.image", ok0, "" if ok0 else "image vertices or origin")

    # (1) U = S on all lattice points and vertices, and P_v = conv(Pi(V(P) on the link)).
    bad = None
    for x in set(p.lattice_points()) | set(p.vertices):
        in_u = ray_exit(p, x, v) == 0
        if in_u != (x in star_set or (x == v)):
            bad = x
            break
    same_hull = Polytope([q(x) for x in link_vertices]) == pv if link_vertices else False
    rep.add("proj.claim1", bad is None and same_hull,
            f"U and S differ at {fmt_point(bad)}" if bad else
            ("" if same_hull else "link vertices do not span P_v"))

    # (2) Pi: S cap M -> P_v cap M_v is a bijection with inverse rho.
    images = [q(x) for x in st.points]
    ok2 = len(set(images)) == len(images) and set(images) == set(pv.lattice_points())
    detail = "" if ok2 else "projection of star points is not onto P_v cap M_v"
    if ok2:
        for y, x in res.lift_table.items():
            if any(isinstance(a, Fraction) for a in x) or x not in star_set or q(x) != y:
                ok2, detail = False, f"rho{fmt_point(y)} = {fmt_point(x)}"
                break
    rep.add("proj.claim2", ok2, detail)

    # (3) link <-> boundary of P_v; ridges opposite v land in facets of P_v.
    link_images = [q(x) for x in links]
    ok3 = (len(set(link_images)) == len(link_images)
           and set(link_images) == set(pv.boundary_points()))
    detail = "" if ok3 else "link points do not match boundary of P_v"
    ridges = []
    for i in st.facets:
        for j, common in p.neighbours(i):
            if p.facets[j].slack(v) != 0:
                ridges.append((i, j, common))
    if ok3:
        for i, j, common in ridges:
            imgs = [q(p.vertices[k]) for k in common]
            if not any(all(g.slack(y) == 0 for y in imgs) for g in pv.facets):
                ok3, detail = False, f"ridge of facets {i},{j} not inside a facet of P_v"
                break
    if ok3:
        samples = list(pv.boundary_points()) + list(pv.vertices)
        for g in pv.facets:
            verts = [pv.vertices[k] for k in g.vertices]
            samples.append(tuple(Fraction(sum(c), len(verts)) for c in zip(*verts)))
        for y in samples:
            x = _rho(p, q, y)
            if not any(p.facets[j].slack(x) == 0 and p.facets[i].slack(x) == 0
                       for i, j, _ in ridges):
                ok3, detail = False, f"{fmt_point(y)} not covered by a projected ridge"
                break
    rep.add("proj.claim3", ok3, detail)

    # (4) rho(V(P_v)) in V(P) cap link; Pi(z) on the boundary; relint case gives vertices.
    ok4, detail = True, ""
    for w in pv.vertices:
        x = res.lift_table[w]
        if not (p.is_vertex(x) and x != v and p.share_facet(x, v)):
            ok4, detail = False, f"rho{fmt_point(w)} = {fmt_point(x)} not a link vertex"
            break
    if ok4:
        for z in link_vertices:
            if pv.in_interior(q(z)):
                ok4, detail = False, f"Pi{fmt_point(z)} interior"
                break
            mid = _midpoint(v, z)
            if len(p.tight_facets(mid)) == 1 and not pv.is_vertex(q(z)):
                ok4, detail = False, f"Pi{fmt_point(z)} should be a vertex of P_v"
                break
    rep.add("proj.claim4", ok4, detail)

    # (5) pos(Pi(F)) cap P_v = Pi(F) for facets F containing v.
    ok5, detail = True, ""
    for i in st.facets:
        img = Polytope([q(x) for x in p.facet_vertices(i)])
        for g in img.facets:
            if g.level == 0:
                continue
            tight = [img.vertices[k] for k in g.vertices]
            if not any(all(h.slack(y) == 0 for y in tight) for h in pv.facets):
                ok5, detail = False, f"outer facet of Pi(F{i}) not on a facet of P_v"
                break
        if not ok5:
            break
        cone = [g for g in img.facets if g.level == 0]
        in_cone = {y for y in pv.lattice_points() if all(g.slack(y) >= 0 for g in cone)}
        if in_cone != set(img.lattice_points()):
            ok5, detail = False, f"lattice points of pos(Pi(F{i})) and Pi(F{i}) differ"
            break
    rep.add("proj.claim5", ok5, detail)

    # (6) parallel facets map to facets; preimages of facets of P_v.
    ok6, detail = True, ""
    ridge_pairs = {r.facets for r in p.ridges()}
    for i, f in enumerate(p.facets):
        if dot(f.normal, v) != 0:
            continue
        imgs = [q(x) for x in p.facet_vertices(i)]
        target = [h for h in pv.facets if all(h.slack(y) == 0 for y in imgs)]
        if affine_rank(imgs) != d - 2 or len(target) != 1:
            ok6, detail = False, f"image of parallel facet {i} is not a facet"
            break
        h = target[0]
        pulled = mat_vec(transpose(q.proj), h.normal)
        if _face_vertices(p, pulled, h.level) != f.vertices:
            ok6, detail = False, f"preimage of image of facet {i} is larger"
            break
        on_h = sum(1 for y in pv.vertices if h.slack(y) == 0)
        in_star = sum(1 for x in p.facet_vertices(i) if x in star_set)
        if in_star < on_h:
            ok6, detail = False, f"facet {i} has {in_star} < {on_h} star vertices"
            break
        for x in p.facet_points(i):
            if x not in star_set:
                continue
            if not any(tuple(sorted((i, j))) in ridge_pairs and x in p.facet_points(j)
                       for j in st.facets if j != i):
                ok6, detail = False, f"{fmt_point(x)} on facet {i}: no facet through v meets it in a ridge"
                break
        if not ok6:
            break
    if ok6:
        for h in pv.facets:
            pulled = mat_vec(transpose(q.proj), h.normal)
            gamma = _face_vertices(p, pulled, h.level)
            pts = [p.vertices[k] for k in gamma]
            dim = affine_rank(pts)
            is_facet = any(g.vertices == gamma for g in p.facets)
            if is_facet and dot(pulled, v) == 0:
                continue
            if dim != d - 2:
                ok6, detail = False, f"preimage of facet {h.normal} has dimension {dim}"
                break
            if affine_rank([q(x) for x in pts]) != d - 2 or len({q(x) for x in pts}) != len(pts):
                ok6, detail = False, f"preimage of facet {h.normal} does not map isomorphically"
                break
            through = [g for g in p.facets if g.slack(v) == 0 and set(gamma) <= set(g.vertices)]
            if len(through) != 1:
                ok6, detail = False, f"{len(through)} facets contain v and the preimage of {h.normal}"
                break
    rep.add("proj.claim6", ok6, detail)

    # (7) if -v in P: every facet contains v, contains -v, or is parallel to v.
    if p.contains(neg(v)):
        bad = [i for i, f in enumerate(p.facets)
               if f.slack(v) != 0 and f.slack(neg(v)) != 0 and dot(f.normal, v) != 0]
        rep.add("proj.claim7", not bad, f"facet {bad[0]}" if bad else "")
    else:
        rep.skip("proj.claim7", "-v not in P")

    # (8) (P_v)* equals the dual slice; reflexive iff the slice is a lattice polytope.
    slc = dual_slice(p, v)
    pvd = dual(pv)
    pvd_vertices = frozenset(tuple(Fraction(a) for a in x) for x in pvd.vertices)
    same = slc.vertex_set() == pvd_vertices
    pv_reflexive = all(g.level == 1 for g in pv.facets)
    ok8 = same and (pv_reflexive == slc.is_lattice)
    rep.add("proj.claim8", ok8, "" if ok8 else "dual slice and dual of P_v differ")
    rep.values["proj.image_reflexive"] = pv_reflexive
    rep.values["proj.slice_lattice"] = slc.is_lattice
    return rep


# -- conditions on a vertex ---------------------------------------------------

def _require_vertex(p: Polytope, v):
    v = tuple(v)
    if not p.is_vertex(v):
        raise NotVertex(f"{fmt_point(v)} is not a vertex")
    return v


def f_condition(p: Polytope, v):
    """Common value of card([v, w] cap M) - 1 over link vertices w, or ``None``."""
    v = _require_vertex(p, v)
    values = {gcd_list(tuple(a - b for a, b in zip(w, v)))
              for w in p.vertices if w != v and p.share_facet(w, v)}
    return values.pop() if len(values) == 1 else None


def z_basis_condition(p: Polytope, v) -> bool:
    """Every ridge opposite v in a facet through v carries a Z-basis shifted by v.

    w_1 - v, ..., w_{d-1} - v is a basis of eta_F^perp cap M exactly when
    det(w_1, ..., w_{d-1}, v) = +-1, because <eta_F, v> = -1 splits M as
    (eta_F^perp cap M) + Zv.
    """
    require_reflexive(p)
    v = _require_vertex(p, v)
    d = p.dim
    lattice = p.boundary_points()
    for i in p.tight_facets(v):
        for j, common in p.neighbours(i):
            if p.facets[j].slack(v) == 0:
                continue
            fi, fj = p.facets[i], p.facets[j]
            pts = [x for x in lattice if fi.slack(x) == 0 and fj.slack(x) == 0]
            if not any(abs(det(list(ws) + [v])) == 1 for ws in combinations(pts, d - 1)):
                return False
    return True


def verify_termprop(p: Polytope) -> CheckReport:
    """semi-terminal iff every P_v is Fano; terminal iff every P_v is canonical Fano."""
    require_reflexive(p)
    images = [project(p, v).image for v in p.vertices]
    all_fano = all(is_fano(q) for q in images)
    all_canonical = all(is_fano(q) and is_canonical(q) for q in images)
    semi = is_semi_terminal(p)
    term = is_terminal(p)
    rep = CheckReport()
    rep.add("termprop.semi_terminal", semi == all_fano,
            f"semi_terminal={semi} all_projections_fano={all_fano}")
    rep.add("termprop.terminal", term == all_canonical,
            f"terminal={term} all_projections_canonical={all_canonical}")
    return rep

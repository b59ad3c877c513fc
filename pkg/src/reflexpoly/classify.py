"""Enumeration of the two-dimensional reflexive polygons.

The search lives in the box [-3, 3]^2.  Seeds are the canonical triangles
with vertices in the box together with the canonical quadrilaterals
conv(+-a, +-b): a canonical polygon containing no canonical triangle among
its lattice points has exactly these lattice points, so every canonical
polygon in the box contains a seed.  Growth adds one box point at a time as
long as the polygon stays canonical; the interior only grows, so a rejected
polygon has no canonical supersets and every canonical polygon in the box
is reached.  Visited polygons are deduplicated by vertex set modulo the
eight symmetries of the box, which keeps the search closed inside the box.
Isomorphism classes are formed by normal form at the very end.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

from .errors import NotFullDimensional
from .normal_form import NormalForm, normal_form
from .polytope import Polytope
from .reflexive import dual, is_reflexive, is_smooth, is_terminal

BOX = 3

_BOX_SYMMETRIES = (
    lambda x, y: (x, y),
    lambda x, y: (-x, y),
    lambda x, y: (x, -y),
    lambda x, y: (-x, -y),
    lambda x, y: (y, x),
    lambda x, y: (-y, x),
    lambda x, y: (y, -x),
    lambda x, y: (-y, -x),
)


def _box_key(vertices):
    return min(tuple(sorted(s(*v) for v in vertices)) for s in _BOX_SYMMETRIES)


def _canonical(points):
    try:
        p = Polytope(points)
    except NotFullDimensional:
        return None
    if not p.origin_interior():
        return None
    if p.interior_points() != ((0, 0),):
        return None
    return p


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _origin_inside_triangle(a, b, c):
    s = (_cross(a, b), _cross(b, c), _cross(c, a))
    return all(x > 0 for x in s) or all(x < 0 for x in s)


def _seeds(box_points):
    seen = {}
    nonzero = [x for x in box_points if x != (0, 0)]
    for tri in combinations(nonzero, 3):
        if not _origin_inside_triangle(*tri):
            continue
        p = _canonical(tri)
        if p is not None:
            seen.setdefault(_box_key(p.vertices), p)
    for a, b in combinations(nonzero, 2):
        na, nb = (-a[0], -a[1]), (-b[0], -b[1])
        if b == na or na < a or nb < b:
            continue
        p = _canonical((a, na, b, nb))
        if p is not None:
            seen.setdefault(_box_key(p.vertices), p)
    return seen


def canonical_polygons_in_box(box: int = BOX) -> list:
    """All canonical polygons with vertices in [-box, box]^2, up to box symmetry."""
    box_points = [(x, y) for x in range(-box, box + 1) for y in range(-box, box + 1)]
    seen = _seeds(box_points)
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for p in frontier:
            inside = set(p.lattice_points())
            for x in box_points:
                if x in inside:
                    continue
                q = _canonical(p.vertices + (x,))
                if q is None:
                    continue
                key = _box_key(q.vertices)
                if key not in seen:
                    seen[key] = q
                    nxt.append(q)
        frontier = nxt
    return list(seen.values())


@dataclass
class PolygonClass:
    label: str
    normal_form: NormalForm
    polygon: Polytope
    n_vertices: int
    n_boundary: int
    dual_label: str = ""
    smooth: bool = False
    terminal: bool = False
    centrally_symmetric: bool = False

    @property
    def self_dual(self) -> bool:
        return self.dual_label == self.label


@dataclass
class ClassificationResult:
    classes: list = field(default_factory=list)
    visited: int = 0

    def by_label(self, label: str) -> PolygonClass:
        for c in self.classes:
            if c.label == label:
                return c
        raise KeyError(label)

    def labels(self) -> list:
        return [c.label for c in self.classes]

    def summary(self) -> str:
        lines = [f"{len(self.classes)} classes"]
        lines.append("label vertices boundary dual smooth terminal symmetric")
        for c in self.classes:
            lines.append(
                f"{c.label} {c.n_vertices} {c.n_boundary} {c.dual_label} "
                f"{int(c.smooth)} {int(c.terminal)} {int(c.centrally_symmetric)}")
        return "\n".join(lines) + "\n"

    def write(self, outdir: str):
        from .polyio import write_polytope

        os.makedirs(outdir, exist_ok=True)
        for c in self.classes:
            with open(os.path.join(outdir, f"d2_{c.label}.poly"), "w") as fh:
                write_polytope(c.polygon, fh, comment=f"reflexive polygon {c.label}")
        with open(os.path.join(outdir, "summary.txt"), "w") as fh:
            fh.write(self.summary())


def _assign_labels(groups):
    """Label = boundary count plus a letter when several classes share it.

    Inside one boundary count, classes are ordered by vertex count
    (descending), centrally symmetric ones first, then by normal form.
    """
    by_boundary = {}
    for nf, poly in groups.items():
        by_boundary.setdefault(len(poly.boundary_points()), []).append((nf, poly))
    labels = {}
    for b, items in sorted(by_boundary.items()):
        items.sort(key=lambda t: (-t[1].n_vertices, not t[1].is_centrally_symmetric(),
                                  t[0].matrix))
        for k, (nf, _) in enumerate(items):
            labels[nf] = str(b) if len(items) == 1 else f"{b}{'abcd'[k]}"
    return labels


def classify_reflexive_2d(box: int = BOX) -> ClassificationResult:
    polygons = canonical_polygons_in_box(box)
    groups = {}
    for p in polygons:
        if not is_reflexive(p):
            raise AssertionError(f"canonical polygon {p.vertices} is not reflexive")
        nf = normal_form(p)
        groups.setdefault(nf, nf.to_polytope())
    labels = _assign_labels(groups)
    classes = []
    for nf, poly in groups.items():
        dual_nf = normal_form(dual(poly))
        if dual_nf not in groups:
            raise AssertionError(f"dual of class {labels[nf]} is missing")
        classes.append(PolygonClass(
            label=labels[nf],
            normal_form=nf,
            polygon=poly,
            n_vertices=poly.n_vertices,
            n_boundary=len(poly.boundary_points()),
            dual_label=labels[dual_nf],
            smooth=is_smooth(poly),
            terminal=is_terminal(poly),
            centrally_symmetric=poly.is_centrally_symmetric(),
        ))
    classes.sort(key=lambda c: (c.n_boundary, c.label))
    return ClassificationResult(classes=classes, visited=len(polygons))

"""A three-dimensional reflexive corpus from vertex deletion in maximal polytopes.

Starting from a few large reflexive polytopes, a child of P is the hull of
the lattice points of P other than one vertex.  The origin stays the only
interior lattice point as long as it stays interior, so every child that is
still Fano is canonical.  Children are deduplicated by normal form and the
reflexive ones are kept.  This gives a cheap, varied corpus; it is not meant
to be exhaustive.
"""

from __future__ import annotations

import heapq
from pathlib import Path

from .errors import PolytopeError
from .gallery import POLYGON_LABELS, cube, polygon, segment, simplex, zonotope
from .normal_form import normal_form
from .polyio import dumps, loads
from .polytope import Polytope, product
from .reflexive import dual, is_fano, is_reflexive

DATA = Path(__file__).with_name("data")
CORPUS_FILE = DATA / "corpus3d.txt"


def seeds_3d() -> list:
    out = [dual(simplex(3)), cube(3), zonotope(3)]
    out += [product(polygon(label), segment()) for label in POLYGON_LABELS]
    return out


def children(p: Polytope):
    pts = p.lattice_points()
    for v in p.vertices:
        rest = [x for x in pts if x != v]
        try:
            q = Polytope(rest)
        except PolytopeError:
            continue
        if q.dim == p.dim and is_fano(q):
            yield q


def generate_corpus(limit: int = 300, seeds=None) -> list:
    """Vertex deletion, expanding the polytope with fewest lattice points first.

    Small-first order reaches simplicial and terminal polytopes quickly and
    then climbs back towards the seeds, so the corpus mixes sizes.  Returns
    up to ``limit`` reflexive polytopes; the order is deterministic.
    """
    seen = set()
    heap = []

    def push(q):
        nf = normal_form(q)
        if nf not in seen:
            seen.add(nf)
            heapq.heappush(heap, (len(q.lattice_points()), nf.columns, q))

    for s in seeds if seeds is not None else seeds_3d():
        push(s)
    found = []
    while heap and len(found) < limit:
        _, _, p = heapq.heappop(heap)
        if is_reflexive(p):
            found.append(p)
        for q in children(p):
            push(q)
    return found


def dump_corpus(polytopes) -> str:
    """Blocks of vertex lines separated by blank lines."""
    return "\n".join(dumps(p) for p in polytopes)


def load_corpus(path=CORPUS_FILE) -> list:
    text = Path(path).read_text()
    blocks = [b for b in text.split("\n\n") if b.strip()]
    return [loads(b) for b in blocks]


def corpus_3d() -> list:
    """The frozen corpus shipped with the package."""
    return load_corpus(CORPUS_FILE)

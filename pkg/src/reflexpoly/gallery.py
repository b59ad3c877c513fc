"""Named polytopes used as examples and test fixtures."""

from __future__ import annotations

from itertools import product as cartesian

from .errors import UnknownName
from .polytope import Polytope, free_sum, product

# Representatives of the sixteen reflexive polygons, pinned from the output
# of classify_reflexive_2d (they are the vertex sets of the normal forms).
POLYGONS = {
    "3": ((0, 1), (1, 0), (-1, -1)),
    "4a": ((-1, 0), (0, -1), (0, 1), (1, 0)),
    "4b": ((-1, 0), (0, 1), (1, 0), (-1, -1)),
    "4c": ((0, 1), (1, 0), (-2, -1)),
    "5a": ((-1, 0), (0, -1), (0, 1), (1, 0), (-1, -1)),
    "5b": ((0, 1), (1, 0), (-1, -1), (-2, -1)),
    "6a": ((-1, 0), (0, -1), (0, 1), (1, 0), (-1, -1), (1, 1)),
    "6b": ((-1, 0), (0, 1), (1, 0), (1, -1), (-2, 1)),
    "6c": ((-1, 0), (0, 1), (1, 0), (-1, -2)),
    "6d": ((0, 1), (1, 0), (-3, -2)),
    "7a": ((-1, 0), (0, 1), (1, 0), (1, 1), (-1, -2)),
    "7b": ((0, 1), (1, 0), (1, 1), (-3, -2)),
    "8a": ((-1, 0), (1, 0), (-1, -2), (1, 2)),
    "8b": ((0, 1), (1, 0), (2, 1), (-3, -2)),
    "8c": ((1, 0), (1, 2), (-3, -4)),
    "9": ((1, 0), (1, 3), (-2, -3)),
}

POLYGON_LABELS = tuple(POLYGONS)


def unit(d: int, i: int) -> tuple:
    return tuple(int(j == i) for j in range(d))


def cube(d: int) -> Polytope:
    return Polytope(cartesian((-1, 1), repeat=d))


def cross(d: int) -> Polytope:
    pts = []
    for i in range(d):
        e = unit(d, i)
        pts += [e, tuple(-x for x in e)]
    return Polytope(pts)


def simplex(d: int) -> Polytope:
    """conv(e_1, ..., e_d, -(e_1 + ... + e_d))."""
    return Polytope([unit(d, i) for i in range(d)] + [(-1,) * d])


def zonotope(d: int) -> Polytope:
    """Z_d = conv(+-[0,1]^d)."""
    pts = [v for v in cartesian((0, 1), repeat=d) if any(v)]
    return Polytope(pts + [tuple(-x for x in v) for v in pts])


def hexagon() -> Polytope:
    return zonotope(2)


def segment() -> Polytope:
    return Polytope([(-1,), (1,)])


def cell24() -> Polytope:
    e = [unit(4, i) for i in range(4)]

    def comb(*terms):
        return tuple(sum(c * v[k] for c, v in terms) for k in range(4))

    pts = list(e)
    pts += [comb((1, e[i]), (-1, e[j])) for i in (0, 1) for j in (1, 2, 3) if j > i]
    pts += [comb((1, e[i]), (-1, e[2]), (-1, e[3])) for i in (0, 1)]
    pts.append(comb((1, e[0]), (1, e[1]), (-1, e[2]), (-1, e[3])))
    return Polytope(pts + [tuple(-x for x in v) for v in pts])


def wirth() -> Polytope:
    """conv(+-(2e1 + e2 + e3 + e4), +-e2, +-e3, +-e4)."""
    pts = [(2, 1, 1, 1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    return Polytope(pts + [tuple(-x for x in v) for v in pts])


def polygon(label: str) -> Polytope:
    try:
        return Polytope(POLYGONS[label])
    except KeyError:
        raise UnknownName(f"unknown polygon label {label!r}") from None


_BUILDERS = {
    "cube": (cube, 1),
    "cross": (cross, 1),
    "simplex": (simplex, 1),
    "zonotope": (zonotope, 1),
    "hexagon": (hexagon, 0),
    "segment": (segment, 0),
    "cell24": (cell24, 0),
    "wirth": (wirth, 0),
    "polygon": (polygon, 1),
}

NAMES = tuple(_BUILDERS) + ("product", "sum", "dual")


def build(expr: str) -> Polytope:
    """Build a polytope from a name expression.

    Examples: ``hexagon``, ``cube 3``, ``polygon 6d``, ``product hexagon hexagon``,
    ``product cube:2 segment``.  Inside ``product``/``sum`` the parameter of a
    factor is attached with a colon.
    """
    words = expr.split()
    if not words:
        raise UnknownName("empty polytope name")
    head, args = words[0], words[1:]
    if head in ("product", "sum"):
        if len(args) != 2:
            raise UnknownName(f"{head} takes exactly two factors")
        a, b = (build(x.replace(":", " ")) for x in args)
        return product(a, b) if head == "product" else free_sum(a, b)
    if head == "dual":
        from .reflexive import dual

        q = dual(build(" ".join(args)))
        if not q.is_lattice:
            raise UnknownName("dual of a non-reflexive polytope is not a lattice polytope")
        return q
    if head not in _BUILDERS:
        raise UnknownName(f"unknown polytope name {head!r}")
    fn, nargs = _BUILDERS[head]
    if len(args) != nargs:
        raise UnknownName(f"{head} takes {nargs} parameter(s), got {len(args)}")
    if head == "polygon":
        return fn(args[0])
    if nargs:
        try:
            d = int(args[0])
        except ValueError:
            raise UnknownName(f"{head} needs an integer dimension, got {args[0]!r}") from None
        if d < 1:
            raise UnknownName(f"{head} needs a positive dimension")
        return fn(d)
    return fn()


def gallery(name: str, *params) -> Polytope:
    return build(" ".join([name, *map(str, params)]))


def standard_gallery() -> dict:
    """The named reflexive polytopes used by sweeps and tests."""
    out = {
        "hexagon": hexagon(),
        "segment": segment(),
        "wirth": wirth(),
        "cell24": cell24(),
    }
    for d in (2, 3, 4):
        out[f"cube {d}"] = cube(d)
        out[f"cross {d}"] = cross(d)
        out[f"simplex {d}"] = simplex(d)
    for d in (2, 3, 4):
        out[f"zonotope {d}"] = zonotope(d)
    for label in POLYGON_LABELS:
        out[f"polygon {label}"] = polygon(label)
    out["product hexagon segment"] = product(hexagon(), segment())
    out["product hexagon hexagon"] = product(hexagon(), hexagon())
    out["sum hexagon segment"] = free_sum(hexagon(), segment())
    out["sum hexagon hexagon"] = free_sum(hexagon(), hexagon())
    return out

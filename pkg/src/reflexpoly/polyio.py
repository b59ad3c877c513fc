"""Plain-text polytope files.

The first non-comment line holds ``d n``; it is followed by ``n`` lines of
``d`` integers, one vertex per line.  ``#`` starts a comment that runs to the
end of the line.  Writers emit the irredundant vertices in canonical order.
"""

from __future__ import annotations

import sys
from typing import TextIO

from .errors import ParseError, WrongDimension
from .polytope import Polytope


def _tokens(line: str):
    """Yield ``(column, token)`` pairs, columns 1-based."""
    col = 0
    n = len(line)
    while col < n:
        while col < n and line[col].isspace():
            col += 1
        if col >= n:
            break
        start = col
        while col < n and not line[col].isspace():
            col += 1
        yield start + 1, line[start:col]


def _int(token, line, column):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line, column) from None


def parse_points(text: str):
    """Parse file contents into ``(d, points)``."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if toks:
            rows.append((lineno, toks))
    if not rows:
        raise ParseError("empty input: expected a 'd n' header", 1, 1)
    lineno, header = rows[0]
    if len(header) != 2:
        col = header[2][0] if len(header) > 2 else len(header) + 1
        raise ParseError("header must be 'd n'", lineno, col)
    d = _int(header[0][1], lineno, header[0][0])
    n = _int(header[1][1], lineno, header[1][0])
    if d < 1:
        raise ParseError("dimension must be positive", lineno, header[0][0])
    if n < 1:
        raise ParseError("vertex count must be positive", lineno, header[1][0])
    body = rows[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] if body else lineno) + 1
        raise ParseError(f"expected {n} point lines, found {len(body)}", where, 1)
    points = []
    for lineno, toks in body:
        if len(toks) != d:
            col = toks[d][0] if len(toks) > d else 1
            raise ParseError(f"expected {d} coordinates, found {len(toks)}", lineno, col)
        points.append(tuple(_int(t, lineno, c) for c, t in toks))
    return d, points


def loads(text: str) -> Polytope:
    _, points = parse_points(text)
    return Polytope(points)


def read_polytope(path: str) -> Polytope:
    """Read a polytope from ``path``; ``-`` reads standard input."""
    if path == "-":
        return loads(sys.stdin.read())
    with open(path) as fh:
        return loads(fh.read())


def dumps(p: Polytope, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{p.dim} {p.n_vertices}")
    lines.extend(" ".join(str(x) for x in v) for v in p.vertices)
    return "\n".join(lines) + "\n"


def write_polytope(p: Polytope, fh: TextIO, comment: str | None = None):
    fh.write(dumps(p, comment))


def parse_vector(text: str, dim: int | None = None) -> tuple:
    """Comma separated integers, as used on the command line."""
    parts = [s.strip() for s in text.split(",")]
    try:
        v = tuple(int(s) for s in parts)
    except ValueError:
        raise ParseError(f"bad vector {text!r}: expected comma separated integers") from None
    if dim is not None and len(v) != dim:
        raise WrongDimension(f"vector {text!r} has {len(v)} coordinates, expected {dim}")
    return v

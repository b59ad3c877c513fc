"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 dimension error,
4 failed precondition, 5 unknown name.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager

from . import bounds
from .errors import PolytopeError, UnknownName
from .gallery import build
from .normal_form import normal_form
from .polyio import dumps, loads, parse_vector, read_polytope
from .projection import project, verify_projection_claims, verify_termprop
from .relations import (
    PairClass,
    boundary_graph,
    casa_bound_check,
    classify_pair,
    graph_check,
    primitive_relation,
    sweep_pairs,
    verify_prim_properties,
)
from .reflexive import dual, is_canonical, is_fano, is_reflexive, predicate_report
from .report import CheckReport, fmt_point

SUITES = ("all", "projection", "prim", "graph", "bounds", "mod", "central", "termprop")


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _emit(args, text: str, data=None):
    if args.format == "json":
        text = json.dumps(data, indent=2, default=str) + "\n"
    with _output(args.out) as fh:
        fh.write(text)


def _dump_rational(q) -> str:
    lines = [f"{q.dim} {len(q.vertices)}"]
    lines += [" ".join(str(x) for x in v) for v in q.vertices]
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------

def cmd_check(args) -> int:
    rep = predicate_report(read_polytope(args.path))
    _emit(args, rep.to_text(), rep.as_dict())
    return 0


def cmd_dual(args) -> int:
    q = dual(read_polytope(args.path))
    if q.is_lattice:
        text = dumps(q)
    else:
        text = "# not a lattice polytope\n" + _dump_rational(q)
    data = {"lattice": q.is_lattice, "vertices": [[str(x) for x in v] for v in q.vertices]}
    _emit(args, text, data)
    return 0


def cmd_project(args) -> int:
    p = read_polytope(args.path)
    v = parse_vector(args.v, p.dim)
    res = project(p, v)
    img = res.image
    rep = predicate_report(img)
    lifts = {fmt_point(y): fmt_point(x) for y, x in res.lift_table.items()}
    text = dumps(img, comment=f"projection along {fmt_point(v)}")
    text += "".join(f"# rho{y} = {x}\n" for y, x in lifts.items())
    data = {"direction": list(v), "vertices": [list(x) for x in img.vertices],
            "rho": lifts, "report": rep.as_dict()}
    _emit(args, text, data)
    return 0


def cmd_pair(args) -> int:
    p = read_polytope(args.path)
    v = parse_vector(args.v, p.dim)
    w = parse_vector(args.w, p.dim)
    cls = classify_pair(p, v, w)
    data = {"class": str(cls)}
    text = str(cls)
    if cls is PairClass.SUM:
        rel = primitive_relation(p, v, w)
        text = str(rel)
        data.update(z=list(rel.z), a=rel.a, b=rel.b)
        rep = verify_prim_properties(p, v, w, rel)
        data.update(rep.as_dict())
    _emit(args, text + "\n", data)
    return 0


def cmd_graph(args) -> int:
    g = boundary_graph(read_polytope(args.path), vertices_only=args.vertices_only)
    diam = g.diameter()
    text = g.to_text() + f"diameter={'none' if diam is None else diam}\n"
    data = {"nodes": [fmt_point(x) for x in g.nodes],
            "adjacency": {fmt_point(x): [fmt_point(y) for y in g.adjacency[x]] for x in g.nodes},
            "diameter": diam}
    _emit(args, text, data)
    return 0


def cmd_normalform(args) -> int:
    nf = normal_form(read_polytope(args.path))
    _emit(args, str(nf) + "\n", {"normal_form": [list(r) for r in nf.matrix]})
    return 0


def cmd_gallery(args) -> int:
    expr = " ".join(args.name)
    p = build(expr)
    _emit(args, dumps(p, comment=expr), {"name": expr, "vertices": [list(v) for v in p.vertices]})
    return 0


def cmd_latticepoints(args) -> int:
    p = read_polytope(args.path)
    pts = p.lattice_points()
    text = "".join(" ".join(map(str, x)) + "\n" for x in pts)
    _emit(args, text, {"count": len(pts), "points": [list(x) for x in pts]})
    return 0


def cmd_classify2d(args) -> int:
    from .classify import classify_reflexive_2d

    outdir = args.outdir or args.out
    if not outdir:
        raise UnknownName("classify2d needs an output directory")
    res = classify_reflexive_2d()
    res.write(outdir)
    sys.stdout.write(res.summary())
    return 0


# -- verify ------------------------------------------------------------------------

def _load_many(path) -> list:
    """(name, polytope) pairs from a file, a directory or a blank-line separated corpus."""
    if os.path.isdir(path):
        out = []
        for name in sorted(os.listdir(path)):
            if name.endswith(".poly"):
                out += _load_many(os.path.join(path, name))
        return out
    text = sys.stdin.read() if path == "-" else open(path).read()
    blocks = [b for b in text.split("\n\n")
              if any(line.split("#", 1)[0].strip() for line in b.splitlines())]
    if len(blocks) <= 1:
        return [(path, loads(text))]
    return [(f"{path}[{k}]", loads(b)) for k, b in enumerate(blocks)]


def verify_polytope(p, suite: str = "all") -> CheckReport:
    """Run every theorem checker whose hypotheses apply to ``p``."""
    rep = CheckReport()

    def want(name):
        return suite in ("all", name)

    fano = is_fano(p)
    reflexive = fano and is_reflexive(p)
    rep.values["reflexive"] = reflexive
    if reflexive and want("projection"):
        for v in p.boundary_points():
            sub = verify_projection_claims(p, v)
            for c in sub.checks:
                if c.status == "fail":
                    rep.add(c.name, False, f"v = {fmt_point(v)}: {c.detail}")
        rep.add("projection.all_claims", not rep.failures())
    if reflexive and p.dim >= 2 and want("prim"):
        stats = sweep_pairs(p)
        f = stats["failures"]
        rep.add("prim.sweep", not f,
                f"{fmt_point(f[0][0])} {fmt_point(f[0][1])}: {f[0][2]}" if f else "")
        rep.values["prim.pairs"] = stats["pairs"]
    if reflexive and p.dim >= 2 and want("graph"):
        rep.merge(graph_check(p))
    if reflexive and want("bounds"):
        rep.merge(bounds.vertex_bounds(p))
        for i, f in enumerate(p.facets):
            if len(f.vertices) == p.dim:
                sub = bounds.lemma_fund_check(p, i)
                for c in sub.checks:
                    if c.status == "fail":
                        rep.add(c.name, False, f"facet {i}: {c.detail}")
        if p.is_simplicial():
            rep.merge(casa_bound_check(p))
            rep.merge(bounds.symmetric_simplicial_check(p))
        if p.dim == 3:
            rep.merge(bounds.verify_thm100(p))
        rep.merge(bounds.conjecture_check(p))
    if fano and p.dim >= 2 and want("mod"):
        rep.merge(bounds.mod_k_analysis(p, 2))
        rep.merge(bounds.terminal_points_check(p))
    if fano and want("central") and p.is_centrally_symmetric() and is_canonical(p):
        rep.merge(bounds.central_bound_check(p))
    if reflexive and want("termprop"):
        rep.merge(verify_termprop(p))
    return rep


def cmd_verify(args) -> int:
    items = _load_many(args.path)
    failed = False
    text, data = [], {}
    for name, p in items:
        rep = verify_polytope(p, args.suite)
        failed |= not rep.passed
        text.append(f"# {name}: {'pass' if rep.passed else 'FAIL'}\n" + rep.to_text())
        data[name] = rep.as_dict()
    text.append(f"# {len(items)} polytope(s), {'failures' if failed else 'all checks passed'}\n")
    _emit(args, "".join(text), data)
    return 1 if failed else 0


# -- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reflexpoly", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, path=True):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if path:
            sp.add_argument("path", help="polytope file, '-' for stdin")
        sp.set_defaults(func=fn)
        return sp

    add("check", cmd_check, "predicate report")
    add("dual", cmd_dual, "dual polytope")
    add("project", cmd_project, "quotient projection along v").add_argument("--v", required=True)
    sp = add("pair", cmd_pair, "classify a pair of boundary points")
    sp.add_argument("--v", required=True)
    sp.add_argument("--w", required=True)
    add("graph", cmd_graph, "the graph W(P)").add_argument("--vertices-only", action="store_true")
    add("normalform", cmd_normalform, "lattice normal form")
    add("latticepoints", cmd_latticepoints, "lattice points")
    sp = add("gallery", cmd_gallery, "emit a named polytope", path=False)
    sp.add_argument("name", nargs="+")
    sp = add("classify2d", cmd_classify2d, "classify reflexive polygons", path=False)
    sp.add_argument("outdir", nargs="?")
    sp = add("verify", cmd_verify, "run the theorem checkers")
    sp.add_argument("--suite", choices=SUITES, default="all")
    return parser


def _join_vector_options(argv):
    """Let ``--v -1,0`` through: argparse would read ``-1,0`` as an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--v", "--w"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_vector_options(argv))
    try:
        return args.func(args)
    except PolytopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

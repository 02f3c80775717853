"""``ubergraph`` command-line front end.

Exit status is 0 on success, 1 when a file fails to load or an analysis
raises, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import levi, matrices, spectral, traversal, ugt
from .core import Ubergraph, is_simplicial_complex
from .errors import UbergraphError, UndefinedInCyclicMode
from .isomorphism import is_isomorphic, is_isomorphic_direct


def _csv_list(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _load(path: str) -> Ubergraph:
    try:
        return ugt.load(path)
    except UbergraphError as exc:
        exc.source = path
        raise


def cmd_validate(args, out) -> None:
    u = _load(args.file)
    out.write(f"valid: {u.n} vertices, {u.m} edges\n")


def cmd_stats(args, out) -> None:
    u = _load(args.file)
    try:
        depth = str(u.depth())
    except UndefinedInCyclicMode:
        depth = "undefined"
    blocks = traversal.components(u)
    out.write(f"mode: {u.mode.value}\n"
              f"n: {u.n}\n"
              f"m: {u.m}\n"
              f"depth: {depth}\n"
              f"connected: {'yes' if len(blocks) <= 1 else 'no'}\n"
              f"components: {len(blocks)}\n"
              "degree:\n")
    width = max((len(x) for x in u.nodes()), default=0)
    for x in u.nodes():
        out.write(f"  {x.ljust(width)} {traversal.degree(u, x)}\n")


def _matrix_cmd(build):
    def run(args, out) -> None:
        mat = build(_load(args.file))
        out.write(mat.to_csv() if args.csv else mat.to_text())
    return run


def cmd_entropy(args, out) -> None:
    out.write(spectral.entropy(_load(args.file)).to_text())


def cmd_levi(args, out) -> None:
    u = _load(args.file)
    d = levi.uber_levi(u)
    out.write(f"dag: {'yes' if levi.is_dag(d) else 'no'}\n")
    out.write(f"roots: {' '.join(d.roots())}\n")
    out.write(f"arcs: {len(d.arcs)}\n")
    for x in d.nodes:
        for y in d.successors(x):
            out.write(f"  {x} -> {y}\n")
    if args.dot:
        Path(args.dot).write_text(levi.to_dot(d), encoding="utf-8", newline="\n")


def cmd_order(args, out) -> None:
    u = _load(args.file)
    order = levi.edge_inclusion_order(u)
    out.write((order.describe() or "no edges") + "\n")
    idx = u.index
    hasse = sorted(order.hasse, key=lambda p: (idx(p[0]), idx(p[1])))
    out.write("hasse: " + ", ".join(f"{a} < {b}" for a, b in hasse) + "\n"
              if hasse else "hasse: none\n")


def cmd_iso(args, out) -> None:
    u, w = _load(args.file1), _load(args.file2)
    witness = is_isomorphic_direct(u, w) if args.direct else is_isomorphic(u, w)
    if witness is None:
        out.write("not isomorphic\n")
    else:
        out.writelines(line + "\n" for line in witness.lines())


def cmd_induce(args, out) -> None:
    out.write(ugt.serialize(traversal.induced_sububergraph(_load(args.file),
                                                           _csv_list(args.vertices))))


def cmd_sub(args, out) -> None:
    out.write(ugt.serialize(traversal.sububergraph(_load(args.file), _csv_list(args.edges))))


def cmd_path(args, out) -> None:
    p = traversal.find_path(_load(args.file), args.source, args.target)
    if p is None:
        out.write("no path\n")
    else:
        out.write(f"path: {', '.join(p.sequence())} (length {p.length})\n")


def cmd_components(args, out) -> None:
    for block in traversal.components(_load(args.file)):
        out.write(" ".join(block) + "\n")


def cmd_simplicial(args, out) -> None:
    verdict = is_simplicial_complex(_load(args.file))
    out.write(f"simplicial complex: {'yes' if verdict else 'no'}\n")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ubergraph",
                                     description="Analyse ubergraphs stored as UGT files.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_, *, csv=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", metavar="FILE")
        if csv:
            p.add_argument("--csv", action="store_true", help="emit RFC 4180 CSV")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a UGT file")
    add("stats", cmd_stats, "sizes, depth, connectivity and degrees")
    add("incidence", _matrix_cmd(matrices.incidence_matrix), "incidence matrix", csv=True)
    add("adjacency", _matrix_cmd(matrices.adjacency_matrix), "adjacency matrix", csv=True)
    add("laplacian", _matrix_cmd(matrices.laplacian), "Laplacian matrix", csv=True)
    add("entropy", cmd_entropy, "Laplacian spectrum and entropy")
    add("levi", cmd_levi, "uber-Levi digraph").add_argument(
        "--dot", metavar="PATH", help="also write Graphviz source to PATH")
    add("order", cmd_order, "edge inclusion order")
    iso = sub.add_parser("iso", help="test two ubergraphs for isomorphism")
    iso.add_argument("file1", metavar="FILE1")
    iso.add_argument("file2", metavar="FILE2")
    iso.add_argument("--direct", action="store_true",
                     help="search vertex bijections directly instead of via Levi digraphs")
    iso.set_defaults(func=cmd_iso)
    add("induce", cmd_induce, "induced sububergraph on a vertex set").add_argument(
        "--vertices", required=True, help="comma-separated fundamental vertices")
    add("sub", cmd_sub, "sububergraph on an edge set").add_argument(
        "--edges", required=True, help="comma-separated edge labels")
    p = add("path", cmd_path, "shortest path between two vertices")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    add("components", cmd_components, "connected components")
    add("simplicial", cmd_simplicial, "is a hypergraph a simplicial complex")
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        args.func(args, out)
    except UbergraphError as exc:
        where = ""
        source = getattr(exc, "source", None)
        if source is not None:
            where = f" [{source}" + (f":{exc.line}:{exc.column}" if exc.line else "") + "]"
        err.write(f"error: {exc.code}: {exc.message}{where}\n")
        return 1
    except OSError as exc:
        err.write(f"error: {exc.strerror or exc}: {exc.filename}\n")
        return 1
    return 0


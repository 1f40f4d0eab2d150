"""Command-line front end.

Exit codes: 0 for a positive answer, 1 for a negative one (certificate on
stdout), 2 for usage, I/O or format errors (one-line diagnostic on stderr).
"""
from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence

from .extraction import IncompatibleRepresentation, extract_strong_elimination_order
from .generators import generate_random_chordal_representation, generate_rdv_representation, generate_sun
from .graph import Graph, GraphError, VertexOrder, parse_graph, serialize_graph
from .host_tree import TreeError, overshadow_verdict
from .orders import (
    InvalidOrderError,
    is_perfect_elimination_order,
    is_strong_elimination_order,
    peo_to_representation,
    seo_to_representation,
)
from .recognition import (
    SizeLimitExceeded,
    brute_force_seo,
    definitional_strongly_chordal,
    greedy_simple_elimination,
)
from .representation import (
    SUBDIVISION_POLICIES,
    RepresentationFormatError,
    TreeRepresentation,
    incompatible_pairs,
    intersection_graph,
    parse_representation,
    serialize_representation,
    subdivide_unit_weights,
)

OK, NEGATIVE, ERROR = 0, 1, 2


class _Refusal(Exception):
    pass


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _load_rep(path: str) -> TreeRepresentation:
    return parse_representation(_read(path))


def _print_quadruple(o: VertexOrder, quad: tuple[int, int, int, int]) -> None:
    print("quadruple: " + ",".join(map(str, quad)))
    print("vertices: " + ",".join(o.at(p) for p in quad))


def cmd_check_order(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    o = VertexOrder.parse(args.order)
    if args.perfect:
        ok, cert = is_perfect_elimination_order(g, o)
        if not ok:
            i, (p, q) = cert
            print("invalid")
            print(f"position: {i}")
            print(f"vertex: {o.at(i)}")
            print(f"pair: {o.at(p)},{o.at(q)}")
            return NEGATIVE
    else:
        ok, quad = is_strong_elimination_order(g, o)
        if not ok:
            print("invalid")
            _print_quadruple(o, quad)
            return NEGATIVE
    print("valid")
    return OK


def cmd_build_rep(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    o = VertexOrder.parse(args.order)
    build = peo_to_representation if args.unit_weights else seo_to_representation
    try:
        r = build(g, o)
    except InvalidOrderError as exc:
        print("invalid")
        if args.unit_weights:
            i, (p, q) = exc.certificate
            print(f"position: {i}")
            print(f"pair: {o.at(p)},{o.at(q)}")
        else:
            _print_quadruple(o, exc.certificate)
        return NEGATIVE
    _write(args.out, serialize_representation(r))
    print(f"wrote: {args.out}")
    return OK


def cmd_extract_order(args: argparse.Namespace) -> int:
    r = _load_rep(args.rep)
    try:
        o = extract_strong_elimination_order(r)
    except IncompatibleRepresentation as exc:
        for v in exc.cycle:
            print(f"cycle: {v}")
        return NEGATIVE
    print(o)
    return OK


def cmd_verify_rep(args: argparse.Namespace) -> int:
    r = _load_rep(args.rep)
    g = intersection_graph(r)
    status = OK
    if args.graph:
        expected = _load_graph(args.graph)
        if expected != g:
            have, want = g.edge_set(), expected.edge_set()
            print("graph-mismatch")
            for v in sorted(set(g.vertices) ^ set(expected.vertices)):
                print(f"vertex: {v}")
            for u, v in sorted(want - have):
                print(f"missing-edge: {u},{v}")
            for u, v in sorted(have - want):
                print(f"extra-edge: {u},{v}")
            status = NEGATIVE
    bad = incompatible_pairs(r, g)
    if bad:
        depth = r.host.depth
        for u, v in bad:
            print(f"incompatible: {u},{v}")
            for a, b in ((u, v), (v, u)):
                verdict = overshadow_verdict(depth, r[a].members, r[b].members)
                print(f"cutoff: {verdict.cutoff}")
                print(f"witness: {verdict.witness}")
        status = NEGATIVE
    if status == OK:
        print("compatible")
    return status


def cmd_recognize(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        if args.method == "greedy":
            ok, cert = greedy_simple_elimination(g)
            print(("sequence: " if ok else "stuck: ") + ",".join(cert if ok else sorted(cert)))
        elif args.method == "bruteforce":
            res = brute_force_seo(g, limit=args.limit or 8)
            ok = res.found
            print(f"order: {res.order}" if ok else f"tried: {res.tried}")
        else:
            ok, cycle = definitional_strongly_chordal(g, limit=args.limit or 12)
            if cycle:
                print("cycle: " + ",".join(cycle))
    except SizeLimitExceeded as exc:
        raise _Refusal(str(exc)) from None
    print("strongly-chordal: " + ("yes" if ok else "no"))
    return OK if ok else NEGATIVE


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "sun":
        if args.k is None:
            raise ValueError("--k is required for --kind sun")
        _write(args.out, serialize_graph(generate_sun(args.k)))
    else:
        if args.nodes is None or args.verts is None:
            raise ValueError("--nodes and --verts are required")
        if args.kind == "rdv":
            r = generate_rdv_representation(args.nodes, args.verts, args.max_weight, args.seed)
        else:
            r = generate_random_chordal_representation(args.nodes, args.verts, args.seed)
        _write(args.out, serialize_representation(r))
    print(f"wrote: {args.out}")
    return OK


def cmd_subdivide(args: argparse.Namespace) -> int:
    report = subdivide_unit_weights(_load_rep(args.rep), args.policy)
    _write(args.out, serialize_representation(report.representation))
    print("graph-preserved: " + ("yes" if report.graph_preserved else "no"))
    print("compatible: " + ("yes" if report.compatible else "no"))
    for u, v in report.incompatible_pairs:
        print(f"incompatible: {u},{v}")
    return OK if report.compatible and report.graph_preserved else NEGATIVE


def cmd_selftest(args: argparse.Namespace) -> int:
    from .selftest import run_checks

    results = run_checks()
    for name, passed in results:
        print(f"{'PASS' if passed else 'FAIL'} {name}")
    return OK if all(p for _, p in results) else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongchordal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-order", help="validate a strong or perfect elimination order")
    p.add_argument("--graph", required=True)
    p.add_argument("--order", required=True, help="comma-separated vertex labels")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--strong", action="store_true", help="strong elimination order (default)")
    kind.add_argument("--perfect", action="store_true", help="perfect elimination order")
    p.set_defaults(func=cmd_check_order)

    p = sub.add_parser("build-rep", help="build a tree representation from an elimination order")
    p.add_argument("--graph", required=True)
    p.add_argument("--order", required=True)
    p.add_argument("--unit-weights", action="store_true", help="unit weights from a perfect elimination order")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build_rep)

    p = sub.add_parser("extract-order", help="read a strong elimination order off a representation")
    p.add_argument("--rep", required=True)
    p.set_defaults(func=cmd_extract_order)

    p = sub.add_parser("verify-rep", help="check compatibility and, optionally, the represented graph")
    p.add_argument("--rep", required=True)
    p.add_argument("--graph")
    p.set_defaults(func=cmd_verify_rep)

    p = sub.add_parser("recognize", help="decide strong chordality")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", choices=("greedy", "bruteforce", "definition"), default="greedy")
    p.add_argument("--limit", type=int, help="vertex limit for the exhaustive methods")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("generate", help="write a generated instance")
    p.add_argument("--kind", choices=("rdv", "chordal", "sun"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nodes", type=int)
    p.add_argument("--verts", type=int)
    p.add_argument("--max-weight", type=int, default=1)
    p.add_argument("--k", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("subdivide", help="replace weighted arcs by unit-weight paths")
    p.add_argument("--rep", required=True)
    p.add_argument("--policy", choices=SUBDIVISION_POLICIES, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("selftest", help="run the built-in example checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except _Refusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return ERROR
    except (OSError, GraphError, RepresentationFormatError, TreeError, InvalidOrderError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())

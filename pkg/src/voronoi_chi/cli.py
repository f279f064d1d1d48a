"""Command line front end.

Exit status is 0 when every computed value agrees with the embedded
reference data and 1 otherwise.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .graphs import ball_graph, torus_graph
from .iso import classification_json, classify
from .pipeline import (ReproductionError, certify, generators_of, invariants_of, resolve_entry,
                       run_dpb, run_dtb, run_table5)
from .qform import catalog, catalog_json, graph_classes
from .sat import DEFAULT_BUDGET, BudgetExceeded, encode_k_coloring, write_dimacs
from .voronoi import verify_catalog_vectors


def _expected_chi(entry):
    return getattr(entry, "expected_chi", None)


def cmd_catalog(args):
    if args.action == "list":
        if args.json:
            print(catalog_json())
        else:
            for e in catalog():
                kind = "z" if e.zonotopal else "n"
                rays = "+".join(f"R{i}" for i in e.rays)
                print(f"{e.symbol:10s} {kind} dim={e.secondary_cone_dim:<2d} "
                      f"|Vor|={2 * len(e.expected_voronoi):<3d} chi={e.expected_chi}  {rays}")
        return 0
    report = verify_catalog_vectors()
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        for c in report.checks:
            print(f"{'ok  ' if c.matches else 'FAIL'} {c.symbol:10s} {2 * len(c.computed)} vectors")
        print(f"{report.match_count}/{len(report.checks)} match")
    return 0 if not report.mismatches else 1


def cmd_classify(args):
    classes = classify(list(catalog()))
    ok = len(classes) == len(graph_classes()) and all(
        c.signature.as_tuple() == (ref.r, ref.edges, ref.aut_order)
        and set(c.members) == set(ref.members)
        for c, ref in zip(classes, graph_classes()))
    if args.json:
        print(classification_json(classes))
    else:
        for c in classes:
            r, e, a = c.signature.as_tuple()
            print(f"{c.class_id:2d} {c.graph_name:10s} r={r:<3d} |E|={e:<4d} aut={a:<6d} "
                  f"n={len(c.members):<3d} {', '.join(c.members)}")
    return 0 if ok else 1


def cmd_invariants(args):
    entry = resolve_entry(args.symbol)
    print(json.dumps(invariants_of(entry), indent=2))
    return 0


def cmd_chi(args):
    breaking = not args.no_symmetry_breaking
    if args.action == "dpb":
        entry = resolve_entry(args.entry)
        res = run_dpb(entry, args.k, budget=args.budget, seed=args.seed)
        print(f"{entry.symbol}: C_1 ({res.vertices} vertices, {res.edges} edges) "
              f"{args.k}-colorable: {res.status}")
        chi = _expected_chi(entry)
        return 0 if chi is None or (res.status == "UNSAT") == (args.k < chi) else 1
    if args.action == "dtb":
        entry = resolve_entry(args.entry)
        res = run_dtb(entry, args.c, budget=args.budget, seed=args.seed,
                      symmetry_breaking=breaking)
        print(f"{entry.symbol}: torus mod {args.c} ({res.vertices} vertices, {res.edges} edges) "
              f"{args.c}-colorable: {res.status}")
        chi = _expected_chi(entry)
        return 0 if chi is None or (res.status == "SAT") == (args.c >= chi) else 1
    # full
    if args.entry:
        entry = resolve_entry(args.entry)
        chi = _expected_chi(entry)
        c = getattr(entry, "torus_scale_c", chi)
        cls = getattr(entry, "expected_class", 0)
        certs = [certify(entry, chi, c, cls, budget=args.budget, seed=args.seed,
                         symmetry_breaking=breaking, out_dir=args.out)]
    else:
        certs = run_table5(budget=args.budget, seed=args.seed, symmetry_breaking=breaking,
                           out_dir=args.out, workers=args.workers)
    for cert in certs:
        print(f"{cert.class_id:2d} {cert.representative:10s} chi={cert.chi} "
              f"DPB {cert.dpb_graph_stats} DTB c={cert.torus_c} {cert.torus_stats} "
              f"{cert.finished - cert.started:.2f}s")
    return 0


def _graph_for(args):
    gens = generators_of(resolve_entry(args.entry))
    if args.torus is not None:
        return torus_graph(gens, args.torus)
    return ball_graph(gens, args.ball if isinstance(args.ball, int) else 1)


def cmd_emit_cnf(args):
    graph = _graph_for(args)
    breaking = args.torus is not None and not args.no_symmetry_breaking
    text = write_dimacs(encode_k_coloring(graph, args.k, breaking))
    Path(args.out).write_text(text)
    return 0


def cmd_graph(args):
    graph = _graph_for(args)
    out = Path(args.out)
    out.write_text(graph.to_json() if out.suffix == ".json" else graph.to_edge_list())
    return 0


def _solver_flags(p):
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="conflict budget")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-symmetry-breaking", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="voronoi-chi",
                                     description="Chromatic numbers of lattice Voronoi graphs")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or verify the 4-dim catalog")
    p.add_argument("action", choices=["list", "verify"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("classify", help="classify the 52 Voronoi graphs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invariants", help="r, |E(C_1)| and |Aut(C_1)| of one lattice")
    p.add_argument("symbol")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("chi", help="lower/upper chromatic bounds")
    chi_sub = p.add_subparsers(dest="action", required=True)
    q = chi_sub.add_parser("dpb")
    q.add_argument("--entry", required=True)
    q.add_argument("--k", type=int, required=True)
    _solver_flags(q)
    q = chi_sub.add_parser("dtb")
    q.add_argument("--entry", required=True)
    q.add_argument("--c", type=int, required=True)
    _solver_flags(q)
    q = chi_sub.add_parser("full")
    q.add_argument("--entry")
    q.add_argument("--out")
    q.add_argument("--workers", type=int, default=1)
    _solver_flags(q)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("emit-cnf", help="write a coloring instance in DIMACS")
    p.add_argument("--entry", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--ball", action="store_true")
    g.add_argument("--torus", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--no-symmetry-breaking", action="store_true")
    p.set_defaults(func=cmd_emit_cnf)

    p = sub.add_parser("graph", help="export a ball or torus graph")
    gsub = p.add_subparsers(dest="action", required=True)
    q = gsub.add_parser("export")
    q.add_argument("--entry", required=True)
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--ball", type=int)
    g.add_argument("--torus", type=int)
    q.add_argument("--out", required=True)
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ReproductionError, BudgetExceeded, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

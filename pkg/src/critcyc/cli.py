"""Command line entry point: ``critcyc <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import List, Optional

from .coloring import DEFAULT_BUDGET as COLORING_BUDGET, is_k_critical
from .cycle_extraction import long_cycle_critical
from .decomposition import (classify_virtual_edges, nucleus, standard_tree_decomposition,
                            validate_decomposition)
from .errors import BudgetExceeded, CritCycError, NotCritical
from .graph_core import read_dimacs, to_dimacs
from .harness import reports_to_csv, reports_to_json, resolve_family, run_bounds_suite, verify_coro2
from .oracles import DEFAULT_BUDGET

EXIT_NOT_CRITICAL = 2
EXIT_BUDGET = 3
EXIT_ERROR = 1


def _emit(text: str, out: Optional[str], name: str) -> None:
    """Print, or write ``name`` inside the directory ``out``."""
    if not text.endswith("\n"):
        text += "\n"
    if out:
        os.makedirs(out, exist_ok=True)
        with open(os.path.join(out, name), "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _stem(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_")


def cmd_gen(args) -> int:
    """One DIMACS file and one label sidecar per instance; stdout gets the DIMACS text if no --out."""
    for name, g, k in resolve_family(args.family):
        index = {v: i + 1 for i, v in enumerate(g.vertices)}
        sidecar = {"instance": name, "k": k, "n": g.n, "m": g.m,
                   "labels": {str(index[v]): g.label(v) for v in g.vertices if v in g.labels}}
        _emit(to_dimacs(g, comment=f"{name}"), args.out, _slug(name) + ".dimacs")
        if args.out:
            _emit(_dump(sidecar), args.out, _slug(name) + ".json")
    return 0


def cmd_check_critical(args) -> int:
    g = read_dimacs(args.graph)
    rep = is_k_critical(g, args.k, args.budget or COLORING_BUDGET)
    _emit(_dump(rep.to_json()), args.out, _stem(args.graph) + ".critical.json")
    return 0 if rep.is_critical else EXIT_NOT_CRITICAL


def cmd_decompose(args) -> int:
    g = read_dimacs(args.graph)
    dec = standard_tree_decomposition(g)
    if args.k:
        dec = classify_virtual_edges(g, dec, args.k)
        nuclei = {t: nucleus(g, dec, t, args.k) for t in dec.nodes}
        body = {"decomposition": dec.to_json(),
                "nuclei": {str(t): {"vertices": list(nu.graph.vertices),
                                    "edges": [list(e) for e in nu.graph.edges],
                                    "degenerate": nu.degenerate, "note": nu.note}
                           for t, nu in nuclei.items()},
                "validation": validate_decomposition(g, dec, args.k, nuclei).to_json()}
    else:
        body = {"decomposition": dec.to_json()}
    _emit(_dump(body), args.out, _stem(args.graph) + ".decomposition.json")
    return 0


def cmd_find_cycle(args) -> int:
    g = read_dimacs(args.graph)
    cyc = long_cycle_critical(g, args.k, budget=args.budget or COLORING_BUDGET)
    _emit(_dump(cyc.to_json()), args.out, _stem(args.graph) + ".cycle.json")
    return 0


def cmd_verify_bounds(args) -> int:
    reports = run_bounds_suite(args.family, args.budget or DEFAULT_BUDGET, args.jobs)
    text = reports_to_csv(reports) if args.format == "csv" else reports_to_json(reports)
    _emit(text, args.out, "bounds." + args.format)
    return 0 if all(r.status == "pass" for r in reports) else EXIT_ERROR


def cmd_verify_coro2(args) -> int:
    g = read_dimacs(args.graph)
    rep = verify_coro2(g, args.k)
    _emit(_dump(rep.to_json()), args.out, _stem(args.graph) + ".coro2.json")
    return 0 if rep.passed else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="critcyc", description="Long cycles in k-critical graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph=True, k=True):
        if graph:
            sp.add_argument("graph", help="graph in DIMACS edge format")
        if k:
            sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--budget", type=int, default=0, help="search node budget (0 for default)")
        sp.add_argument("--out", help="directory for output files instead of stdout")

    sp = sub.add_parser("gen", help="write a generated graph in DIMACS format")
    sp.add_argument("--family", required=True)
    sp.add_argument("--out", help="directory for the .dimacs files and label sidecars")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("check-critical", help="decide k-criticality with per-edge witnesses")
    common(sp)
    sp.set_defaults(func=cmd_check_critical)

    sp = sub.add_parser("decompose", help="standard tree decomposition as JSON")
    common(sp, k=False)
    sp.add_argument("--k", type=int, default=0, help="classify virtual edges and validate for this k")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("find-cycle", help="long cycle in a k-critical graph")
    common(sp)
    sp.set_defaults(func=cmd_find_cycle)

    sp = sub.add_parser("verify-bounds", help="check the circumference bounds over a family")
    sp.add_argument("--family", required=True)
    sp.add_argument("--budget", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out", help="directory for bounds.json or bounds.csv")
    sp.set_defaults(func=cmd_verify_bounds)

    sp = sub.add_parser("verify-coro2", help="long odd cycle from a long cycle")
    common(sp)
    sp.set_defaults(func=cmd_verify_coro2)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotCritical as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_CRITICAL
    except BudgetExceeded as e:
        print(f"error: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (CritCycError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

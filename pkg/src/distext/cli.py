"""Command-line front end.

Exit codes: 0 success / verification passed, 1 verification failed (the report
is still written), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import extendability as ext
from .enumerate import enumerate_connected, enumerate_connected_balanced_bipartite, read_graph6_file
from .graph import (
    FAMILY_KINDS,
    Graph,
    Graph6Error,
    GraphFamilySpec,
    bipartite_family,
    build,
    general_family,
    parse_graph6,
    two_coloring,
    write_graph6,
)
from .iso import UnsupportedSizeError
from .spectrum import (
    DEFAULT_TOL,
    ConvergenceError,
    DisconnectedGraphError,
    distance_matrix,
    spectral_radius,
    write_distance_csv,
)
from .verify import (
    VerificationReport,
    polynomial_report,
    scan_s_range_bipartite,
    scan_s_range_general,
    sweep_lemma_bh,
    verify_lemma_pf,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
)

log = logging.getLogger("distext")

JOBS_ENV = "DISTEXT_JOBS"


class UsageError(Exception):
    pass


def format_radius(r: float, digits: int) -> str:
    text = f"{r:.{digits}g}"
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def _read_graph(arg: str) -> Graph:
    text = sys.stdin.readline() if arg == "-" else arg
    return parse_graph6(text)


def _with_bipartition(g: Graph) -> Graph:
    sides = two_coloring(g)
    if sides is None:
        raise UsageError("graph is not bipartite")
    return g.with_bipartition(*sides)


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2) if args.format == "json" else text
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _emit_reports(args, reports: list[VerificationReport]) -> int:
    if args.format == "json":
        payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
        out = json.dumps(payload, indent=2)
    else:
        lines = []
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.suite} {json.dumps(r.parameters)} scanned={r.graphs_scanned}"
            if r.minimizer:
                m = r.minimizer
                gap = "n/a" if m["gap"] is None else format_radius(m["gap"], args.digits)
                line += f" minimizer={m['graph6']} radius={format_radius(m['radius'], args.digits)} gap={gap}"
            lines.append(line)
            for f in r.failures:
                lines.append(f"  failure: {f['reason']} graph6={f['graph6']} margin={f['margin']}")
        out = "\n".join(lines)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    csv_path = getattr(args, "csv", None)
    if csv_path:
        with open(csv_path, "w") as fh:
            for r in reports:
                fh.write(r.rows_csv())
    return 0 if all(r.passed for r in reports) else 1


# -- subcommands -----------------------------------------------------------------------


def cmd_radius(args) -> int:
    g = _read_graph(args.graph6)
    d = distance_matrix(g)
    res = spectral_radius(d, args.tol)
    if args.dump_matrix:
        write_distance_csv(d, args.dump_matrix)
    _emit(args, res.to_dict(), format_radius(res.radius, args.digits))
    return 0


def cmd_check_extendable(args) -> int:
    g = _read_graph(args.graph6)
    methods = [args.method]
    if args.method == "all":
        # bipartite-only conditions are skipped for non-bipartite input
        methods = ["direct", "tutte"] + (["hall", "deletion"] if two_coloring(g) is not None else [])
    verdicts = {}
    for m in methods:
        if m == "direct":
            v = ext.is_k_extendable_direct(g, args.k)
        elif m == "tutte":
            v = ext.is_k_extendable_tutte(g, args.k)
        else:
            h = _with_bipartition(g)
            v = ext.is_k_extendable_hall(h, args.k) if m == "hall" else ext.is_k_extendable_deletion(h, args.k)
        verdicts[m] = v
    payload = {m: {"k": v.k, "holds": v.holds, "witness": v.witness.to_dict() if v.witness else None} for m, v in verdicts.items()}
    text = "\n".join(f"{m}: {'yes' if v.holds else 'no'}" + (f" {v.witness.to_json()}" if v.witness else "") for m, v in verdicts.items())
    _emit(args, payload, text)
    return 0


def cmd_check_factor_critical(args) -> int:
    g = _read_graph(args.graph6)
    methods = ["direct", "tutte"] if args.method == "all" else [args.method]
    verdicts = {}
    for m in methods:
        fn = ext.is_k_factor_critical if m == "direct" else ext.is_k_factor_critical_tutte
        verdicts[m] = fn(g, args.k)
    payload = {m: {"k": v.k, "holds": v.holds, "witness": v.witness.to_dict() if v.witness else None} for m, v in verdicts.items()}
    text = "\n".join(f"{m}: {'yes' if v.holds else 'no'}" + (f" {v.witness.to_json()}" if v.witness else "") for m, v in verdicts.items())
    _emit(args, payload, text)
    return 0


def cmd_construct(args) -> int:
    if args.kind in ("general-family", "bipartite-family"):
        if None in (args.n, args.k, args.s):
            raise UsageError(f"{args.kind} needs --n, --k and --s")
        fam = general_family if args.kind == "general-family" else bipartite_family
        g = fam(args.n, args.k, args.s)
    else:
        if args.kind.startswith("extremal-"):
            if args.n is None or args.k is None:
                raise UsageError(f"{args.kind} needs --n and --k")
            params = (args.n, args.k)
        else:
            if not args.params:
                raise UsageError(f"{args.kind} needs --params")
            params = tuple(int(x) for x in args.params.split(","))
        g = build(GraphFamilySpec(args.kind, params))
    payload = {"graph6": write_graph6(g), "n": g.n, "edges": g.num_edges, "bipartition": [list(p) for p in g.bipartition] if g.bipartition else None}
    _emit(args, payload, write_graph6(g))
    return 0


def _graph_source(args):
    if args.input:
        return list(read_graph6_file(args.input, dedup=args.dedup))
    return None


def cmd_verify_theorem(args) -> int:
    fn = {"verify-theorem1": verify_theorem1, "verify-theorem2": verify_theorem2, "verify-theorem3": verify_theorem3}[args.command]
    report = fn(args.n, args.k, graphs=_graph_source(args), jobs=args.jobs)
    return _emit_reports(args, [report])


def cmd_verify_lemmas(args) -> int:
    reports = []
    if args.lemma in ("pf", "all"):
        reports.append(verify_lemma_pf(args.trials, args.max_order, args.seed))
    if args.lemma in ("bh", "all"):
        reports.append(sweep_lemma_bh(args.bh_max_order))
    if args.lemma in ("polynomials", "all"):
        reports.append(polynomial_report(args.k_max))
    return _emit_reports(args, reports)


def cmd_scan_s(args) -> int:
    reports = []
    if args.family in ("general", "both"):
        reports.append(scan_s_range_general(args.n, args.k))
    if args.family in ("bipartite", "both"):
        reports.append(scan_s_range_bipartite(args.n, args.k))
    return _emit_reports(args, reports)


def cmd_enumerate(args) -> int:
    if args.bipartite:
        graphs = enumerate_connected_balanced_bipartite(args.order)
    else:
        graphs = enumerate_connected(args.order, allow_large=args.allow_large)
    lines = [write_graph6(g) for g in graphs]
    out = "\n".join(lines)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distext", description="Distance spectral radius and matching extendability.")
    parser.add_argument("-q", "--quiet", action="store_true", help="suppress progress messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def out_flags(p, report=False):
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--output", help="write results to this file instead of stdout")
        p.add_argument("--digits", type=int, default=12, help="significant digits for printed radii")
        if report:
            p.add_argument("--csv", help="also write (graph6, radius, property) rows here")

    def nk(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("radius", help="distance spectral radius of one graph", description="Distance spectral radius (Perron root of the distance matrix) by power iteration; the quantity minimised in Theorems 1-3.")
    p.add_argument("--graph6", required=True, help="graph6 string, or - to read one line from stdin")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--dump-matrix", help="write the distance matrix as CSV")
    out_flags(p)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser(
        "check-extendable",
        help="decide k-extendability",
        description="Decide whether every k-matching extends to a perfect matching: directly, by the Tutte-type "
        "odd-component condition (Lemma 1), or for bipartite graphs by the Hall-type and deletion conditions (Lemma 2).",
    )
    p.add_argument("--graph6", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["direct", "tutte", "hall", "deletion", "all"], default="direct")
    out_flags(p)
    p.set_defaults(func=cmd_check_extendable)

    p = sub.add_parser(
        "check-factor-critical",
        help="decide k-factor-criticality",
        description="Decide whether deleting any k vertices leaves a perfect matching, directly or by the "
        "odd-component characterisation used for Theorem 3.",
    )
    p.add_argument("--graph6", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["direct", "tutte", "all"], default="direct")
    out_flags(p)
    p.set_defaults(func=cmd_check_factor_critical)

    p = sub.add_parser(
        "construct",
        help="build a named graph and print its graph6",
        description="Build join/union/diamond graphs, the extremal graphs of Theorems 1-3, or the G^(s) / B^(s) families.",
    )
    p.add_argument("kind", choices=list(FAMILY_KINDS) + ["general-family", "bipartite-family"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--params", help="comma-separated integers for join/union/complete/empty/diamond/configuration")
    out_flags(p)
    p.set_defaults(func=cmd_construct)

    default_jobs = int(os.environ.get(JOBS_ENV, "1"))
    theorem_help = {
        "verify-theorem1": "Theorem 1: among connected non-k-extendable graphs of order 2n, K_2k ∨ (K_{2n-2k-1} ∪ K_1) uniquely minimises the distance spectral radius.",
        "verify-theorem2": "Theorem 2: among connected balanced bipartite non-k-extendable graphs of order 2n, K_{n-k,n-1} ⋄ K_{k,1} uniquely minimises the distance spectral radius.",
        "verify-theorem3": "Theorem 3: among connected non-k-factor-critical graphs of order n, K_k ∨ (K_{n-k-1} ∪ K_1) uniquely minimises the distance spectral radius.",
    }
    for name, desc in theorem_help.items():
        p = sub.add_parser(name, help=desc.split(":")[0] + " exhaustive check", description=desc)
        nk(p)
        p.add_argument("--input", help="graph6 file to scan instead of the built-in enumeration")
        p.add_argument("--dedup", action="store_true", help="drop isomorphic repeats from --input")
        p.add_argument("--jobs", type=int, default=default_jobs, help=f"worker processes (default from ${JOBS_ENV} or 1)")
        out_flags(p, report=True)
        p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser(
        "verify-lemmas",
        help="edge-addition monotonicity, clique-configuration minimisation, quotient polynomials",
        description="Lemma 3: adding an edge strictly lowers the distance spectral radius (random trials). "
        "Lemma 4: K_s ∨ (K_{n-s-p+1} ∪ (p-1)K_1) minimises the radius over K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_p}). "
        "Also checks the quotient characteristic polynomials phi, phi_s, phi_1, phi_2 exactly.",
    )
    p.add_argument("--lemma", choices=["pf", "bh", "polynomials", "all"], default="all")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--max-order", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bh-max-order", type=int, default=10)
    p.add_argument("--k-max", type=int, default=10)
    out_flags(p)
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser(
        "scan-s",
        help="proof-internal checks over the G^(s) and B^(s) families",
        description="Theorems 1 and 2, proof internals: radius of every G^(s) / B^(s) against the extremal radius, "
        "Perron part values, Rayleigh lower bounds and the small special cases.",
    )
    nk(p)
    p.add_argument("--family", choices=["general", "bipartite", "both"], default="both")
    out_flags(p)
    p.set_defaults(func=cmd_scan_s)

    p = sub.add_parser("enumerate", help="list connected graphs of an order as graph6", description="Isomorph-free connected graphs (or balanced bipartite graphs) of one order: the scan space for Theorems 1-3.")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--allow-large", action="store_true", help="permit orders 9 and 10 (slow)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not logging.getLogger().handlers:
        logging.basicConfig(stream=sys.stderr, level=logging.WARNING if args.quiet else logging.INFO, format="%(message)s")
    try:
        return args.func(args)
    except (Graph6Error, DisconnectedGraphError, UnsupportedSizeError, UsageError, ValueError, OSError) as exc:
        print(f"distext: error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"distext: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

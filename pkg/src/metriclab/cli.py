"""Command-line entry point.

One binary with verb subcommands: gen (extremal families), solve (metric
dimension), hyper (hypergraph ops), td (tree decompositions), bound
(closed-form bounds), verify (claim suites). stdout carries exactly one
machine-parseable payload per invocation (graph6, hypergraph text, PACE
text, JSON, CSV, or the verify table); diagnostics go to stderr.

Exit codes: 0 success or suite pass, 1 suite failure, 2 usage or bad
input, 3 instance over its size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import bound_names, evaluate_bound
from .config import load_config
from .errors import DomainError, FormatError, TooLargeError
from .extremal import gen_grid_chain, gen_hs, gen_l, gen_line_example, gen_o
from .graphs import Graph, parse_edge_list, parse_graph6, to_graph6
from .harness import run_suite, suite_names
from .hypergraphs import (
    distance_hypergraph,
    distance_hypergraph_fixed_radius,
    dual,
    format_hypergraph,
    min_test_cover,
    parse_hypergraph,
    prop9_witness,
    vc2_dimension,
    vc_dimension,
)
from .resolving import is_resolving, metric_dimension_exact, tree_metric_dimension
from .treedec import (
    clique_tree,
    format_pace,
    length,
    parse_pace,
    treewidth_exact,
    validate,
    width,
)
from .treedec import reduce as reduce_decomposition


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _read_graph(path: str) -> Graph:
    """graph6 by default; 'u v' integer pairs switch to edge-list mode."""
    text = _read_text(path)
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty graph input")
    parts = lines[0].split()
    if len(parts) == 2:
        try:
            int(parts[0]), int(parts[1])
        except ValueError:
            pass
        else:
            return parse_edge_list(text)
    return parse_graph6(lines[0])


def _read_hypergraph(path: str):
    return parse_hypergraph(_read_text(path))


def _cap(args, field: str) -> int | None:
    """Explicit --maxn beats the config file; neither means library defaults."""
    if getattr(args, "maxn", None) is not None:
        return args.maxn
    if getattr(args, "config", None):
        return getattr(load_config(args.config), field)
    return None


def _json_line(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


def _vertex_set(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


# ---------------------------------------------------------------------------
# gen


def _cmd_gen(args) -> tuple[str, int]:
    if args.family == "l":
        g = gen_l(args.r)
        doc = {"schema": 1, "family": "l", "params": {"r": args.r}, "order": g.n}
    elif args.family == "hs":
        g, spec = gen_hs(args.d, args.k, args.a)
        doc = spec.to_json()
    elif args.family == "o":
        g, spec = gen_o(args.d, args.k, with_chords=args.chords)
        doc = spec.to_json()
    elif args.family == "grid-chain":
        g, spec = gen_grid_chain(args.t)
        doc = spec.to_json()
    else:
        g, spec = gen_line_example(args.k, maxk=_cap(args, "line_k"))
        doc = spec.to_json()
    code = to_graph6(g)
    doc["graph6"] = code
    if args.json == "-":
        return _json_line(doc), 0
    if args.json:
        Path(args.json).write_text(_json_line(doc), encoding="utf-8")
    return code + "\n", 0


# ---------------------------------------------------------------------------
# solve


def _cmd_solve(args) -> tuple[str, int]:
    g = _read_graph(args.input)
    if args.op == "md":
        cert = metric_dimension_exact(g, maxn=_cap(args, "md_n"))
        return _json_line(cert.to_json()), 0
    if args.op == "tree-md":
        cert = tree_metric_dimension(g)
        return _json_line(cert.to_json()), 0
    ok = is_resolving(g, args.set)
    return _json_line({"schema": 1, "set": sorted(args.set), "resolving": ok}), 0


# ---------------------------------------------------------------------------
# hyper


def _cmd_hyper(args) -> tuple[str, int]:
    if args.op == "dhg":
        g = _read_graph(args.input)
        if args.radius is not None:
            h = distance_hypergraph_fixed_radius(g, args.radius)
        else:
            h = distance_hypergraph(g)
        return format_hypergraph(h), 0
    h = _read_hypergraph(args.input)
    cap = _cap(args, "vc_n")
    if args.op == "vc":
        k, witness = vc_dimension(h, maxn=cap)
        shattered = witness.vertices if witness else []
        return _json_line({"schema": 1, "vc": k, "shattered": shattered}), 0
    if args.op == "vc2":
        k, witness = vc2_dimension(h, maxn=cap)
        return _json_line({"schema": 1, "vc2": k, "set": witness.vertices}), 0
    if args.op == "dual":
        return format_hypergraph(dual(h)), 0
    if args.op == "tc":
        chosen = min_test_cover(h, maxn=cap)
        return _json_line({"schema": 1, "size": len(chosen), "edges": chosen}), 0
    return format_hypergraph(prop9_witness(h, maxn=cap)), 0


# ---------------------------------------------------------------------------
# td


def _cmd_td(args) -> tuple[str, int]:
    if args.op == "cliquetree":
        g = _read_graph(args.input)
        return format_pace(clique_tree(g)), 0
    if args.op == "tw":
        g = _read_graph(args.input)
        tw, td = treewidth_exact(g, maxn=_cap(args, "treewidth_n"))
        if args.decomp == "-":
            return format_pace(td), 0
        if args.decomp:
            Path(args.decomp).write_text(format_pace(td), encoding="utf-8")
        return _json_line({"schema": 1, "treewidth": tw}), 0
    host = _read_graph(args.graph)
    td = parse_pace(_read_text(args.input), host)
    if args.op == "validate":
        violations = validate(td)
        return _json_line({"schema": 1, "valid": not violations, "violations": violations}), 0
    if args.op == "width":
        return _json_line({"schema": 1, "width": width(td)}), 0
    if args.op == "length":
        return _json_line({"schema": 1, "length": length(td)}), 0
    return format_pace(reduce_decomposition(td)), 0


# ---------------------------------------------------------------------------
# bound / verify


_BOUND_PARAMS = ("d", "k", "w", "l", "t", "r", "tc", "vcstar", "dvcstar")


def _cmd_bound(args) -> tuple[str, int]:
    params = {p: getattr(args, p) for p in _BOUND_PARAMS if getattr(args, p) is not None}
    value = evaluate_bound(args.name, **params)
    doc = {
        "schema": 1,
        "name": value.name,
        "params": value.params,
        "value": value.value,
        "form": value.form,
    }
    return _json_line(doc), 0


def _cmd_verify(args) -> tuple[str, int]:
    if args.csv and args.json == "-":
        raise DomainError("--csv conflicts with --json - (both claim stdout)")
    report = run_suite(args.suite, nmax=args.nmax, seed=args.seed, corpus=args.corpus)
    code = 0 if report.passed else 1
    if args.json == "-":
        return report.json_text(), code
    if args.json:
        Path(args.json).write_text(report.json_text(), encoding="utf-8")
    if args.csv:
        return report.csv_text(), code
    return report.table_text(), code


# ---------------------------------------------------------------------------
# parser


def _add_io(sub, *, maxn_help="override the size cap for this call"):
    sub.add_argument("input", nargs="?", default="-", help="input file, or - for stdin")
    sub.add_argument("--maxn", type=int, help=maxn_help)
    sub.add_argument("--config", help="key=value cap file; --maxn wins over it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metriclab",
        description="exact metric-dimension toolkit: generators, solvers, decompositions, claim suites",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    gen = verbs.add_parser("gen", help="emit an extremal family member as graph6")
    fams = gen.add_subparsers(dest="family", required=True)
    p = fams.add_parser("l", help="comb tree used as a building block")
    p.add_argument("--r", type=int, required=True)
    p = fams.add_parser("hs", help="comb assembly attaining the tree bound")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, help="split for odd diameters (required there)")
    p = fams.add_parser("o", help="outerplanar family with prescribed diameter and dimension")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--chords", action="store_true", help="add the nested chord fan")
    p = fams.add_parser("grid-chain", help="chain of t square grids with a 3-point resolving set")
    p.add_argument("--t", type=int, required=True)
    p = fams.add_parser("line-example", help="line graph separating dimension from vc")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--maxn", type=int, help="override the k cap")
    p.add_argument("--config", help="key=value cap file")
    for sp in fams.choices.values():
        sp.add_argument("--json", metavar="OUT", help="write the spec JSON to OUT (- replaces the graph6 line)")
        sp.set_defaults(handler=_cmd_gen)

    solve = verbs.add_parser("solve", help="metric dimension solvers")
    ops = solve.add_subparsers(dest="op", required=True)
    p = ops.add_parser("md", help="exact metric dimension with certificate")
    _add_io(p)
    p = ops.add_parser("tree-md", help="closed-form tree metric dimension")
    _add_io(p)
    p = ops.add_parser("resolving-check", help="test whether a given set resolves")
    _add_io(p)
    p.add_argument("--set", type=_vertex_set, required=True, metavar="V1,V2,...")
    for sp in ops.choices.values():
        sp.set_defaults(handler=_cmd_solve)

    hyper = verbs.add_parser("hyper", help="hypergraph operations")
    ops = hyper.add_subparsers(dest="op", required=True)
    p = ops.add_parser("dhg", help="distance hypergraph of a graph")
    _add_io(p)
    p.add_argument("--radius", type=int, help="single-radius ball family instead of all radii")
    for name, text in (
        ("vc", "vc dimension with a shattered witness"),
        ("vc2", "2-vc dimension with its witness set"),
        ("dual", "incidence-transposed hypergraph"),
        ("tc", "minimum test cover"),
        ("prop9", "twin-free reduction witness"),
    ):
        p = ops.add_parser(name, help=text)
        _add_io(p)
    for sp in ops.choices.values():
        sp.set_defaults(handler=_cmd_hyper)

    td = verbs.add_parser("td", help="tree decomposition operations")
    ops = td.add_subparsers(dest="op", required=True)
    for name, text in (
        ("validate", "check bag cover, edge cover, and connectivity"),
        ("width", "max bag size minus one"),
        ("length", "max in-bag host distance"),
        ("reduce", "absorb nested bags"),
    ):
        p = ops.add_parser(name, help=text)
        _add_io(p)
        p.add_argument("--graph", required=True, help="host graph file (graph6 or edge list)")
    p = ops.add_parser("cliquetree", help="clique tree of a chordal graph")
    _add_io(p)
    p = ops.add_parser("tw", help="exact treewidth")
    _add_io(p)
    p.add_argument("--decomp", metavar="OUT", help="also write the decomposition (- replaces the JSON)")
    for sp in ops.choices.values():
        sp.set_defaults(handler=_cmd_td)

    bound = verbs.add_parser("bound", help="closed-form order bounds")
    bound.add_argument("name", choices=bound_names())
    for p_name in _BOUND_PARAMS:
        bound.add_argument(f"--{p_name}", type=int)
    bound.set_defaults(handler=_cmd_bound)

    verify = verbs.add_parser("verify", help="run a claim suite")
    verify.add_argument("suite", choices=suite_names())
    verify.add_argument("--nmax", type=int, help="pool limit (meaning is per suite)")
    verify.add_argument("--corpus", help="graph6 corpus file for pools past n=7")
    verify.add_argument("--seed", type=int, help="PRNG seed for the randomized suite")
    verify.add_argument("--json", metavar="OUT", help="write the JSON report (- replaces the table)")
    verify.add_argument("--csv", action="store_true", help="emit failures as CSV instead of the table")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        text, code = args.handler(args)
    except (FormatError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

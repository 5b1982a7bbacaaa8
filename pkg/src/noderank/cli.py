"""Command-line surface.

Subcommands: generate, analyze, rank, robustness, spread, hist.
Every command is deterministic given its full flag set (seeds included)
and reports embed enough provenance to be regenerated byte-identically.

Exit codes (stable scripting contract):
  0  success
  1  usage error (bad flags, infeasible request, empty seed set)
  2  data error (unreadable or malformed input, degenerate graph)
  3  numerical or capacity failure (no convergence, ill-conditioned
     solve, zero matrix, graph beyond the dense DEMATEL cap)
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path


from . import __version__
from ._threads import apply_thread_cap
from .errors import (
    DegenerateGraphError,
    DuplicateNodeIdError,
    EmptyInputError,
    EmptySeedsError,
    FieldParseError,
    HeaderMismatchError,
    IllConditionedError,
    InfeasibleSpecError,
    MalformedLineError,
    MatrixTooLargeError,
    NoConvergenceError,
    PlanInfeasibleError,
    UnknownMetricError,
    ZeroMatrixError,
)
from .generators import GeneratorSpec, generate
from .graph import Graph, emit_edge_list, emit_gnid_table, load_edge_list, load_gnid_table
from .influence import MEASURES, measure_scores, rank_by
from .centrality import rank_order
from .propagation import SirParams, auto_beta, sir_simulate, validate_ranking
from .robustness import RemovalPlan, run_removal
from .report import (
    SCHEMA_VERSION,
    build_report,
    fmt,
    histogram_csv,
    histogram_data,
    influence_to_csv,
    influence_to_json,
    metric_values,
    provenance_for_file,
    report_to_csv_pair,
    report_to_json,
    svg_bar_chart,
)

import json

USAGE_EXIT, DATA_EXIT, NUMERIC_EXIT = 1, 2, 3

_NUMERIC_ERRORS = (NoConvergenceError, IllConditionedError, ZeroMatrixError, MatrixTooLargeError)
_DATA_ERRORS = (
    MalformedLineError, EmptyInputError, HeaderMismatchError, DuplicateNodeIdError,
    FieldParseError, DegenerateGraphError, OSError, KeyError, IndexError,
)
_USAGE_ERRORS = (InfeasibleSpecError, PlanInfeasibleError, EmptySeedsError,
                 UnknownMetricError, ValueError)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we reserve 2 for data errors
        raise _UsageError(message)


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh)


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


# --- subcommands ---------------------------------------------------------------


def _cmd_generate(args) -> int:
    model = {"ba": "scale_free", "er": "uniform_random"}[args.model]
    spec = GeneratorSpec(model=model, nodes=args.nodes, target_edges=args.edges, seed=args.seed)
    g = generate(spec)
    header = (
        f"noderank {__version__} generate model={args.model} nodes={args.nodes} "
        f"edges={args.edges} seed={args.seed}\n"
        f"realized nodes={g.node_count} edges={g.edge_count}"
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            emit_edge_list(g, fh, header=header)
    else:
        emit_edge_list(g, sys.stdout, header=header)
    return 0


def _cmd_analyze(args) -> int:
    if args.input is None and args.gnid is None:
        raise _UsageError("analyze needs --input and/or --gnid")
    if args.format == "csv" and not args.out:
        raise _UsageError("--format csv needs --out DIR")

    gnid_echo = None
    if args.gnid:
        with open(args.gnid, "r", encoding="utf-8") as fh:
            records = load_gnid_table(fh)
        gnid_echo = emit_gnid_table(records)

    if args.input is None:
        if args.out:
            _write(Path(args.out) / "gnid_echo.csv", gnid_echo)
        else:
            sys.stdout.write(gnid_echo)
        return 0
    if args.gnid and not args.out:
        raise _UsageError("--gnid together with --input needs --out DIR")

    g = _load_graph(args.input)
    provenance = {
        "tool": "noderank",
        "version": __version__,
        "command": "analyze",
        "input": provenance_for_file(args.input),
        "flags": {"format": args.format, "alpha": args.alpha},
        "gnid": provenance_for_file(args.gnid) if args.gnid else None,
    }
    report = build_report(g, alpha=args.alpha, provenance=provenance)
    if not report.dematel_included:
        print(f"warning: {report.dematel_skip_reason}; fused ranking is GSM-only (alpha=1)",
              file=sys.stderr)

    if args.out:
        out = Path(args.out)
        if args.format == "json":
            _write(out / "report.json", report_to_json(report))
        else:
            summary_csv, nodes_csv = report_to_csv_pair(report)
            _write(out / "summary.csv", summary_csv)
            _write(out / "nodes.csv", nodes_csv)
        _write(out / "influence.csv", influence_to_csv(report.influence_rows))
        _write(out / "influence.json", influence_to_json(report.influence_rows))
        if gnid_echo is not None:
            _write(out / "gnid_echo.csv", gnid_echo)
    else:
        sys.stdout.write(report_to_json(report))
    return 0


def _cmd_rank(args) -> int:
    g = _load_graph(args.input)
    scores = measure_scores(args.method, g, alpha=args.alpha)
    order = rank_order(scores)
    top = order[:args.top] if args.top >= 0 else order
    lines = []
    for pos, node in enumerate(top, start=1):
        lines.append(f"{pos}\t{g.label_of(int(node))}\t{fmt(float(scores[node]))}")
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        _write(Path(args.out), text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_robustness(args) -> int:
    g = _load_graph(args.input)
    plans = []
    if args.strategy in ("targeted", "both"):
        plans.append(RemovalPlan(
            strategy="targeted_degree", step_fraction=args.step, max_fraction=args.max,
            trials=1, seed=args.seed, adaptive=args.adaptive,
        ))
    if args.strategy in ("random", "both"):
        plans.append(RemovalPlan(
            strategy="random", step_fraction=args.step, max_fraction=args.max,
            trials=args.trials, seed=args.seed,
        ))
    curves = {p.strategy: run_removal(g, p) for p in plans}

    bundle = {
        "schema_version": SCHEMA_VERSION,
        "input": provenance_for_file(args.input),
        "flags": {"strategy": args.strategy, "step": args.step, "max": args.max,
                  "trials": args.trials, "seed": args.seed, "adaptive": args.adaptive},
        "baseline_lcc": next(iter(curves.values())).baseline_lcc,
        "strategies": {
            name: {
                "trials": c.trials,
                "auc": c.auc,
                "points": [
                    {"removed_fraction": float(f), "mean_lcc_fraction": float(m),
                     "stddev": float(s)}
                    for f, m, s in zip(c.fractions, c.mean_lcc, c.stddev)
                ],
            }
            for name, c in curves.items()
        },
    }
    if args.out:
        out = Path(args.out)
        for name, c in curves.items():
            rows = ["removed_fraction,mean_lcc_fraction,stddev"]
            rows += [f"{fmt(float(f))},{fmt(float(m))},{fmt(float(s))}"
                     for f, m, s in zip(c.fractions, c.mean_lcc, c.stddev)]
            _write(out / f"robustness_{name}.csv", "\n".join(rows) + "\n")
        _write(out / "robustness.json", json.dumps(bundle, indent=2, allow_nan=False) + "\n")
    else:
        sys.stdout.write(json.dumps(bundle, indent=2, allow_nan=False) + "\n")
    return 0


def _parse_seed_spec(spec: str):
    kind, _, rest = spec.partition(":")
    if kind == "list" and rest:
        return ("list", rest.split(","))
    if kind == "top":
        k_text, _, method = rest.partition(":")
        try:
            k = int(k_text)
        except ValueError:
            raise _UsageError(f"bad seed spec {spec!r}: K must be an integer") from None
        if method not in MEASURES:
            raise _UsageError(f"bad seed spec {spec!r}: method must be one of {MEASURES}")
        return ("top", k, method)
    raise _UsageError(f"bad seed spec {spec!r}: expected top:K:METHOD or list:a,b,c")


def _cmd_spread(args) -> int:
    g = _load_graph(args.input)
    beta = args.beta if args.beta == "auto" else float(args.beta)
    parsed = _parse_seed_spec(args.seeds)
    params = SirParams(beta=beta, mu=args.mu, max_steps=args.steps,
                       trials=args.trials, seed=args.seed)

    if parsed[0] == "list":
        seeds = [g.index_of(tok) for tok in parsed[1]]
        result = sir_simulate(g, seeds, params)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "mode": "simulate",
            "seeds": [g.label_of(s) for s in result.seeds],
            "beta": result.beta,
            "mu": result.mu,
            "max_steps": result.max_steps,
            "trials": result.trials,
            "mean_outbreak_fraction": result.mean_outbreak_fraction,
            "stddev": result.stddev,
        }
        csv_text = None
    else:
        _, k, method = parsed
        ranking = rank_by(method, g, alpha=args.alpha)
        val = validate_ranking(g, ranking, k, params)
        resolved_beta = auto_beta(g) if beta == "auto" else float(beta)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "mode": "validate",
            "method": method,
            "k": k,
            "beta": resolved_beta,
            "top_nodes": [g.label_of(s) for s in val.top_nodes],
            "random_nodes": [g.label_of(s) for s in val.random_nodes],
            "top_mean_outbreak": val.top_mean,
            "random_mean_outbreak": val.random_mean,
            "ratio": val.ratio,
            "trials_per_node": val.trials_per_node,
        }
        csv_text = (
            "method,k,top_mean_outbreak,random_mean_outbreak,ratio,trials_per_node\n"
            f"{method},{k},{fmt(val.top_mean)},{fmt(val.random_mean)},"
            f"{fmt(val.ratio)},{val.trials_per_node}\n"
        )

    text = json.dumps(payload, indent=2, allow_nan=False) + "\n"
    if args.out:
        _write(Path(args.out), text)
        if csv_text:
            _write(Path(args.out).with_suffix(".csv"), csv_text)
    else:
        sys.stdout.write(text)
        if csv_text:
            sys.stdout.write(csv_text)
    return 0


def _cmd_hist(args) -> int:
    g = _load_graph(args.input)
    values = metric_values(g, args.metric, alpha=args.alpha)
    edges, counts = histogram_data(values, args.bins)
    svg = svg_bar_chart(edges, counts, title=f"{args.metric} distribution",
                        log_scale=args.log)
    out = Path(args.out)
    _write(out, svg)
    csv_path = out.with_suffix(".csv") if out.suffix == ".svg" else Path(str(out) + ".csv")
    _write(csv_path, histogram_csv(edges, counts))
    return 0


# --- parser --------------------------------------------------------------------


def _build_parser() -> _Parser:
    p = _Parser(prog="noderank", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"noderank {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a synthetic edge list")
    g.add_argument("--model", choices=("ba", "er"), required=True,
                   help="ba = preferential attachment, er = uniform random")
    g.add_argument("--nodes", type=int, required=True)
    g.add_argument("--edges", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="output path (default stdout)")
    g.set_defaults(func=_cmd_generate)

    a = sub.add_parser("analyze", help="full structural + influence report")
    a.add_argument("--input", help="edge-list file")
    a.add_argument("--gnid", help="node-table CSV to echo losslessly")
    a.add_argument("--format", choices=("json", "csv"), default="json")
    a.add_argument("--alpha", type=float, default=0.5,
                   help="fusion weight on the GSM side (default 0.5)")
    a.add_argument("--out", help="output directory (default: JSON to stdout)")
    a.set_defaults(func=_cmd_analyze)

    r = sub.add_parser("rank", help="top-k nodes under one measure")
    r.add_argument("--input", required=True)
    r.add_argument("--method", choices=MEASURES, required=True)
    r.add_argument("--top", type=int, default=10, help="list length (0 = empty)")
    r.add_argument("--alpha", type=float, default=0.5)
    r.add_argument("--out", help="output path (default stdout)")
    r.set_defaults(func=_cmd_rank)

    rb = sub.add_parser("robustness", help="node-removal degradation curves")
    rb.add_argument("--input", required=True)
    rb.add_argument("--strategy", choices=("random", "targeted", "both"), default="both")
    rb.add_argument("--step", type=float, default=0.01)
    rb.add_argument("--max", type=float, default=0.30)
    rb.add_argument("--trials", type=int, default=10)
    rb.add_argument("--seed", type=int, default=0)
    rb.add_argument("--adaptive", action="store_true",
                    help="re-rank targeted victims by residual degree each step")
    rb.add_argument("--out", help="output directory (default: JSON to stdout)")
    rb.set_defaults(func=_cmd_robustness)

    s = sub.add_parser("spread", help="SIR outbreak size for a seed set")
    s.add_argument("--input", required=True)
    s.add_argument("--seeds", required=True, help="top:K:METHOD or list:a,b,c")
    s.add_argument("--beta", default="auto", help="infection probability or 'auto'")
    s.add_argument("--mu", type=float, default=1.0)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--steps", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--alpha", type=float, default=0.5)
    s.add_argument("--out", help="output path (default stdout)")
    s.set_defaults(func=_cmd_spread)

    h = sub.add_parser("hist", help="SVG histogram + bin CSV for a metric")
    h.add_argument("--input", required=True)
    h.add_argument("--metric", choices=("degree", "gsm", "fused"), required=True)
    h.add_argument("--bins", type=int, default=20)
    h.add_argument("--log", action="store_true", help="log10(1+count) bar heights")
    h.add_argument("--alpha", type=float, default=0.5)
    h.add_argument("--out", required=True, help="SVG path; bin CSV lands beside it")
    h.set_defaults(func=_cmd_hist)
    return p


def main(argv=None) -> int:
    apply_thread_cap()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except _NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NUMERIC_EXIT
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())

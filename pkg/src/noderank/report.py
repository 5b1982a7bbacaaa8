"""Analysis reports, score exports, and plain-SVG histograms.

Reports are built once as plain dict/list structures and then serialized
to JSON (schema_version 1) or a CSV pair.  Serialization rules that keep
repeated runs byte-identical:

* provenance carries the input digest / generator spec, tool version and
  flags - never wall-clock time;
* CSV floats use the 17-significant-digit form (%.17g), JSON floats use
  Python's shortest round-trip repr; both parse back to the exact value;
* missing values (e.g. DEMATEL skipped above its size cap) serialize as
  JSON null and empty CSV cells.

The SVG emitter draws bare rects and axis lines so the output stays
diffable and dependency-free.
"""

from __future__ import annotations

import hashlib
import io
import json
from dataclasses import dataclass

import numpy as np

from . import __version__ as _version
from .centrality import (
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality_robust,
    rank_order,
)
from .errors import UnknownMetricError
from .graph import Graph
from .influence import (
    DEMATEL_MAX_NODES,
    dematel_direct,
    dematel_total,
    fused_ranking,
    gsm_scores,
    minmax_normalize,
)
from .metrics import degree_histogram, k_shell, summarize, clustering_vector

__all__ = [
    "AnalysisReport",
    "build_report",
    "report_to_json",
    "report_to_csv_pair",
    "influence_table",
    "influence_to_csv",
    "influence_to_json",
    "histogram_data",
    "svg_bar_chart",
    "provenance_for_file",
    "fmt",
]

SCHEMA_VERSION = 1

NODE_COLUMNS = (
    "node", "label", "degree", "k_shell", "clustering",
    "dc", "bc", "cc", "ec", "si", "gi", "gsm",
    "prominence", "fused", "rank",
)

INFLUENCE_COLUMNS = (
    "node_id", "ks", "SI", "GI", "gsm", "D", "R",
    "prominence", "relation", "fused", "rank",
)

HIST_METRICS = ("degree", "gsm", "fused")


def fmt(x) -> str:
    """CSV cell formatting: 17 significant digits for floats, '' for None."""
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def provenance_for_file(path: str) -> dict:
    with open(path, "rb") as fh:
        digest = hashlib.sha256(fh.read()).hexdigest()
    return {"path": str(path), "sha256": digest}


@dataclass(frozen=True)
class AnalysisReport:
    provenance: dict
    summary: dict
    dematel_included: bool
    dematel_skip_reason: str | None
    alpha: float
    nodes: list[dict]
    influence_rows: list[dict] = None  # full score table, exported separately

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "provenance": self.provenance,
            "summary": self.summary,
            "dematel": {
                "included": self.dematel_included,
                "skip_reason": self.dematel_skip_reason,
            },
            "alpha": self.alpha,
            "nodes": self.nodes,
        }


def build_report(g: Graph, alpha: float = 0.5, provenance: dict | None = None) -> AnalysisReport:
    """Compute every per-node quantity and the graph summary in one pass.

    Above the dense DEMATEL cap the prominence column is null, the fused
    score falls back to the GSM-only ranking, and the skip is recorded.
    """
    n = g.node_count
    summary = summarize(g)
    hist = degree_histogram(g)
    shells = k_shell(g)
    clus = clustering_vector(g)
    dc = degree_centrality(g).values
    bc = betweenness_centrality(g).values
    cc = closeness_centrality(g).values
    ec = eigenvector_centrality_robust(g).values
    gsm = gsm_scores(g, shells)

    dematel_ok = n <= DEMATEL_MAX_NODES
    if dematel_ok:
        dem = dematel_total(dematel_direct(g))
        fused = fused_ranking(gsm, dem, alpha)
        prominence = dem.prominence
        relation = dem.relation
        dispatch, receive = dem.dispatch, dem.receive
        fused_scores, order = fused.fused, fused.order
        skip_reason = None
        effective_alpha = alpha
    else:
        prominence = relation = dispatch = receive = None
        fused_scores = minmax_normalize(gsm.gsm)
        order = rank_order(fused_scores)
        skip_reason = f"{n} nodes exceeds the dense DEMATEL cap of {DEMATEL_MAX_NODES}"
        effective_alpha = 1.0

    rank_of = np.empty(n, dtype=np.int64)
    rank_of[order] = np.arange(1, n + 1)

    degs = g.degrees
    nodes = []
    for i in range(n):
        nodes.append({
            "node": int(i),
            "label": g.label_of(i),
            "degree": int(degs[i]),
            "k_shell": int(shells[i]),
            "clustering": float(clus[i]),
            "dc": float(dc[i]),
            "bc": float(bc[i]),
            "cc": float(cc[i]),
            "ec": float(ec[i]),
            "si": float(gsm.self_influence[i]),
            "gi": float(gsm.global_influence[i]),
            "gsm": float(gsm.gsm[i]),
            "prominence": float(prominence[i]) if prominence is not None else None,
            "fused": float(fused_scores[i]),
            "rank": int(rank_of[i]),
        })

    summary_dict = {
        "nodes": summary.nodes,
        "edges": summary.edges,
        "density": summary.density,
        "average_degree": summary.average_degree,
        "diameter": summary.diameter,
        "average_path_length": summary.average_path_length,
        "average_clustering": summary.average_clustering,
        "max_k_shell": summary.max_k_shell,
        "path_stats_exact": summary.path_stats_exact,
        "degree_exponent": hist.exponent,
    }
    return AnalysisReport(
        provenance=provenance or {},
        summary=summary_dict,
        dematel_included=dematel_ok,
        dematel_skip_reason=skip_reason,
        alpha=effective_alpha,
        nodes=nodes,
        influence_rows=_influence_rows(
            g, shells, gsm, dispatch, receive, prominence, relation, fused_scores, rank_of
        ),
    )


def _influence_rows(g, shells, gsm, dispatch, receive, prominence, relation, fused, rank_of):
    rows = []
    for i in range(g.node_count):
        rows.append({
            "node_id": g.label_of(i),
            "ks": int(shells[i]),
            "SI": float(gsm.self_influence[i]),
            "GI": float(gsm.global_influence[i]),
            "gsm": float(gsm.gsm[i]),
            "D": float(dispatch[i]) if dispatch is not None else None,
            "R": float(receive[i]) if receive is not None else None,
            "prominence": float(prominence[i]) if prominence is not None else None,
            "relation": float(relation[i]) if relation is not None else None,
            "fused": float(fused[i]),
            "rank": int(rank_of[i]),
        })
    return rows


def influence_table(report: AnalysisReport) -> list[dict]:
    return list(report.influence_rows or [])


def report_to_json(report: AnalysisReport) -> str:
    return json.dumps(report.as_dict(), indent=2, allow_nan=False) + "\n"


def report_to_csv_pair(report: AnalysisReport) -> tuple[str, str]:
    """(summary_csv, nodes_csv) carrying exactly the JSON report's values."""
    s = io.StringIO()
    s.write("key,value\n")
    s.write(f"schema_version,{SCHEMA_VERSION}\n")
    for key, value in report.summary.items():
        s.write(f"{key},{fmt(value)}\n")
    s.write(f"dematel_included,{report.dematel_included}\n")
    s.write(f"alpha,{fmt(report.alpha)}\n")

    nodes = io.StringIO()
    nodes.write(",".join(NODE_COLUMNS) + "\n")
    for row in report.nodes:
        nodes.write(",".join(fmt(row[c]) for c in NODE_COLUMNS) + "\n")
    return s.getvalue(), nodes.getvalue()


def influence_to_csv(rows: list[dict]) -> str:
    out = io.StringIO()
    out.write(",".join(INFLUENCE_COLUMNS) + "\n")
    for row in rows:
        out.write(",".join(fmt(row[c]) for c in INFLUENCE_COLUMNS) + "\n")
    return out.getvalue()


def influence_to_json(rows: list[dict]) -> str:
    return json.dumps(
        {"schema_version": SCHEMA_VERSION, "scores": rows}, indent=2, allow_nan=False
    ) + "\n"


# --- histograms ---------------------------------------------------------------


def metric_values(g: Graph, metric: str, alpha: float = 0.5) -> np.ndarray:
    if metric == "degree":
        return g.degrees.astype(np.float64)
    if metric == "gsm":
        return gsm_scores(g).gsm
    if metric == "fused":
        if g.node_count <= DEMATEL_MAX_NODES:
            return fused_ranking(gsm_scores(g), dematel_total(dematel_direct(g)), alpha).fused
        return minmax_normalize(gsm_scores(g).gsm)
    raise UnknownMetricError(f"unknown metric {metric!r}; pick one of {HIST_METRICS}")


def histogram_data(values: np.ndarray, bins: int) -> tuple[np.ndarray, np.ndarray]:
    counts, edges = np.histogram(np.asarray(values, dtype=np.float64), bins=bins)
    return edges, counts


def histogram_csv(edges: np.ndarray, counts: np.ndarray) -> str:
    out = io.StringIO()
    out.write("bin_left,bin_right,count\n")
    for k in range(counts.shape[0]):
        out.write(f"{fmt(float(edges[k]))},{fmt(float(edges[k + 1]))},{int(counts[k])}\n")
    return out.getvalue()


def svg_bar_chart(
    edges: np.ndarray,
    counts: np.ndarray,
    title: str = "",
    log_scale: bool = False,
    width: int = 640,
    height: int = 400,
) -> str:
    """Minimal bar chart: rects, two axis lines, a handful of labels."""
    margin = 50
    plot_w = width - 2 * margin
    plot_h = height - 2 * margin
    heights = np.log10(1.0 + counts) if log_scale else counts.astype(np.float64)
    top = heights.max() if heights.size and heights.max() > 0 else 1.0

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{title}</text>'
        )
    nbins = counts.shape[0]
    bar_w = plot_w / nbins if nbins else plot_w
    for k in range(nbins):
        h = plot_h * (heights[k] / top)
        x = margin + k * bar_w
        y = margin + plot_h - h
        parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{bar_w * 0.92:.2f}" height="{h:.2f}" '
            f'fill="steelblue"/>'
        )
    # axes
    parts.append(
        f'<line x1="{margin}" y1="{margin + plot_h}" x2="{margin + plot_w}" '
        f'y2="{margin + plot_h}" stroke="black"/>'
    )
    parts.append(
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{margin + plot_h}" stroke="black"/>'
    )
    # end labels
    parts.append(
        f'<text x="{margin}" y="{margin + plot_h + 16}" font-family="sans-serif" '
        f'font-size="11" text-anchor="middle">{edges[0]:.4g}</text>'
    )
    parts.append(
        f'<text x="{margin + plot_w}" y="{margin + plot_h + 16}" font-family="sans-serif" '
        f'font-size="11" text-anchor="middle">{edges[-1]:.4g}</text>'
    )
    ymax_label = f"{top:.4g}" + (" (log10(1+n))" if log_scale else "")
    parts.append(
        f'<text x="{margin - 6}" y="{margin + 4}" font-family="sans-serif" '
        f'font-size="11" text-anchor="end">{ymax_label}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

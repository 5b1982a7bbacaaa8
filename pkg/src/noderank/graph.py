"""Immutable undirected simple graphs plus file ingestion.

A :class:`Graph` stores its adjacency in CSR form (``indptr``/``indices``)
with neighbor lists sorted ascending, which is what every compute kernel
in this package consumes.  Node ids from parsed files are kept as
``labels``; internally nodes are always the dense indices ``0..N-1`` in
first-appearance order.
"""

from __future__ import annotations

import io
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

import numpy as np

from . import _kernels
from .errors import (
    DuplicateNodeIdError,
    EmptyInputError,
    FieldParseError,
    HeaderMismatchError,
    MalformedLineError,
)

__all__ = [
    "Graph",
    "ParseReport",
    "NodeRecord",
    "GNID_HEADER",
    "build_graph",
    "parse_edge_list",
    "load_edge_list",
    "emit_edge_list",
    "load_gnid_table",
    "emit_gnid_table",
    "remove_nodes",
    "largest_connected_component",
]

GNID_HEADER = (
    "Node ID",
    "Network Type",
    "Node Type",
    "Connections",
    "k-Shell Index",
    "Self-Influence Score",
    "Global Influence Score",
)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph in CSR form.

    Invariants (enforced by :func:`build_graph`): no self-loops, no
    duplicate edges, symmetric adjacency, each neighbor list sorted
    ascending, ``len(indices) == 2 * edge_count``.

    ``origin`` is set by :func:`remove_nodes` and maps each surviving
    node to its index in the parent graph.
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: tuple[str, ...] | None = None
    origin: np.ndarray | None = field(default=None, compare=False)

    @property
    def node_count(self) -> int:
        return self.indptr.shape[0] - 1

    @property
    def edge_count(self) -> int:
        return self.indices.shape[0] // 2

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, i: int) -> np.ndarray:
        self._check_index(i)
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def has_edge(self, i: int, j: int) -> bool:
        row = self.neighbors(i)
        k = np.searchsorted(row, j)
        return bool(k < row.shape[0] and row[k] == j)

    def label_of(self, i: int) -> str:
        self._check_index(i)
        return self.labels[i] if self.labels is not None else str(i)

    def index_of(self, token: str) -> int:
        """Resolve an external id (label first, bare index as fallback)."""
        if self.labels is not None:
            try:
                return self.labels.index(token)
            except ValueError:
                pass
        try:
            i = int(token)
        except ValueError:
            raise KeyError(f"unknown node id {token!r}") from None
        self._check_index(i)
        return i

    def edge_array(self) -> np.ndarray:
        """All edges as an (E, 2) array with i < j, sorted lexicographically."""
        n = self.node_count
        rows = np.repeat(np.arange(n, dtype=np.int64), self.degrees)
        mask = rows < self.indices
        return np.column_stack((rows[mask], self.indices[mask]))

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.node_count:
            raise IndexError(f"node index {i} out of range [0, {self.node_count})")

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(N={self.node_count}, E={self.edge_count})"


@dataclass(frozen=True)
class ParseReport:
    """What the edge-list parser dropped while building a graph."""

    lines: int = 0
    dropped_self_loops: int = 0
    dropped_duplicates: int = 0

    @property
    def dropped(self) -> int:
        return self.dropped_self_loops + self.dropped_duplicates


def build_graph(
    node_count: int,
    edges: np.ndarray | Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> tuple[Graph, ParseReport]:
    """Build a Graph from raw (possibly dirty) edge pairs.

    Self-loops and duplicate edges are dropped and counted in the returned
    :class:`ParseReport`; everything else is canonicalized into sorted CSR.
    """
    e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    e = e.reshape(-1, 2)
    if e.size and (e.min() < 0 or e.max() >= node_count):
        raise IndexError("edge endpoint out of range")

    loops = e[:, 0] == e[:, 1]
    n_loops = int(loops.sum())
    e = e[~loops]
    # canonical orientation i < j, then dedupe
    e = np.sort(e, axis=1)
    if e.shape[0]:
        uniq = np.unique(e, axis=0)
    else:
        uniq = e
    n_dup = e.shape[0] - uniq.shape[0]

    both = np.concatenate([uniq, uniq[:, ::-1]]) if uniq.shape[0] else uniq.reshape(0, 2)
    counts = np.bincount(both[:, 0], minlength=node_count) if both.shape[0] else np.zeros(node_count, dtype=np.int64)
    indptr = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    if both.shape[0]:
        order = np.lexsort((both[:, 1], both[:, 0]))
        indices = both[order, 1].copy()
    else:
        indices = np.zeros(0, dtype=np.int64)

    g = Graph(indptr=indptr, indices=indices, labels=tuple(labels) if labels is not None else None)
    return g, ParseReport(dropped_self_loops=n_loops, dropped_duplicates=n_dup)


def _tokenize(line: str) -> list[str]:
    body = line.split("#", 1)[0]
    return body.replace(",", " ").split()


def parse_edge_list(source: TextIO | str) -> tuple[Graph, ParseReport]:
    """Parse a "u v" edge list; `#` starts a comment, ids are arbitrary tokens.

    Tokens are assigned dense indices in first-appearance order and kept as
    labels.  Raises :class:`MalformedLineError` for lines that do not have
    exactly two tokens and :class:`EmptyInputError` when no edge line is
    present at all.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    n_lines = 0
    for line_no, raw in enumerate(stream, start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        if len(tokens) != 2:
            raise MalformedLineError(line_no, raw.rstrip("\n"))
        n_lines += 1
        pair = []
        for tok in tokens:
            if tok not in index:
                index[tok] = len(index)
            pair.append(index[tok])
        edges.append((pair[0], pair[1]))
    if not edges:
        raise EmptyInputError("no edges in input")
    labels = [None] * len(index)
    for tok, i in index.items():
        labels[i] = tok
    g, report = build_graph(len(index), np.array(edges, dtype=np.int64), labels=labels)
    return g, ParseReport(
        lines=n_lines,
        dropped_self_loops=report.dropped_self_loops,
        dropped_duplicates=report.dropped_duplicates,
    )


def load_edge_list(source: TextIO | str) -> Graph:
    """:func:`parse_edge_list` that reports drops via ``warnings.warn``."""
    g, report = parse_edge_list(source)
    if report.dropped:
        warnings.warn(
            f"dropped {report.dropped_duplicates} duplicate edge(s) "
            f"and {report.dropped_self_loops} self-loop(s)",
            stacklevel=2,
        )
    return g


def emit_edge_list(g: Graph, stream: TextIO | None = None, header: str | None = None) -> str:
    """Write the canonical edge list (i < j, lexicographic, labels if any)."""
    out = stream or io.StringIO()
    if header:
        for line in header.rstrip("\n").split("\n"):
            out.write(f"# {line}\n")
    for i, j in g.edge_array():
        out.write(f"{g.label_of(int(i))} {g.label_of(int(j))}\n")
    return out.getvalue() if stream is None else ""


# --- node-table (GNID) ingestion --------------------------------------------


@dataclass(frozen=True)
class NodeRecord:
    """One row of a node-influence table.

    The numeric fields are parsed for computation, but ``raw`` keeps the
    original cell text so a table round-trips byte-identically.  The
    influence columns are opaque sample data: they carry no topology and
    are never fed into any computation here.
    """

    node_id: str
    network_type: str
    node_type: str
    connections: int
    k_shell_index: int
    self_influence: float
    global_influence: float
    raw: tuple[str, ...]


def _split_csv_row(line: str) -> list[str]:
    return [cell.strip() for cell in line.rstrip("\r\n").split(",")]


def load_gnid_table(source: TextIO | str) -> list[NodeRecord]:
    """Parse a node table with the exact seven-column header.

    Raises HeaderMismatchError / DuplicateNodeIdError / FieldParseError.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    lines = [ln for ln in stream.read().split("\n") if ln.strip() != ""]
    if not lines:
        raise HeaderMismatchError("empty table: missing header row")
    header = tuple(_split_csv_row(lines[0]))
    if header != GNID_HEADER:
        raise HeaderMismatchError(f"expected {','.join(GNID_HEADER)!r}, got {lines[0]!r}")

    records: list[NodeRecord] = []
    seen: set[str] = set()
    int_cols = {3: "Connections", 4: "k-Shell Index"}
    float_cols = {5: "Self-Influence Score", 6: "Global Influence Score"}
    for row_no, line in enumerate(lines[1:], start=1):
        cells = _split_csv_row(line)
        if len(cells) != len(GNID_HEADER):
            raise FieldParseError(row_no, "row", line)
        node_id = cells[0]
        if node_id in seen:
            raise DuplicateNodeIdError(f"row {row_no}: duplicate node id {node_id!r}")
        seen.add(node_id)
        parsed: dict[int, float | int] = {}
        for col, name in int_cols.items():
            try:
                parsed[col] = int(cells[col])
            except ValueError:
                raise FieldParseError(row_no, name, cells[col]) from None
        for col, name in float_cols.items():
            try:
                parsed[col] = float(cells[col])
            except ValueError:
                raise FieldParseError(row_no, name, cells[col]) from None
        records.append(
            NodeRecord(
                node_id=node_id,
                network_type=cells[1],
                node_type=cells[2],
                connections=int(parsed[3]),
                k_shell_index=int(parsed[4]),
                self_influence=float(parsed[5]),
                global_influence=float(parsed[6]),
                raw=tuple(cells),
            )
        )
    return records


def emit_gnid_table(records: Sequence[NodeRecord], stream: TextIO | None = None) -> str:
    """Re-emit a node table from the preserved raw cells (lossless)."""
    out = stream or io.StringIO()
    out.write(",".join(GNID_HEADER) + "\n")
    for rec in records:
        out.write(",".join(rec.raw) + "\n")
    return out.getvalue() if stream is None else ""


# --- structure-changing operations -------------------------------------------


def remove_nodes(g: Graph, victims: Iterable[int]) -> Graph:
    """Induced subgraph on the survivors.

    Survivors keep ascending original order; the result's ``origin`` array
    maps each new index back to the old one, and labels follow along.
    """
    victim_set = set(int(v) for v in victims)
    for v in victim_set:
        g._check_index(v)
    n = g.node_count
    keep = np.ones(n, dtype=bool)
    if victim_set:
        keep[list(victim_set)] = False
    survivors = np.flatnonzero(keep)
    remap = np.full(n, -1, dtype=np.int64)
    remap[survivors] = np.arange(survivors.shape[0], dtype=np.int64)

    edges = g.edge_array()
    if edges.shape[0]:
        mask = keep[edges[:, 0]] & keep[edges[:, 1]]
        edges = remap[edges[mask]]
    sub, _ = build_graph(
        survivors.shape[0],
        edges,
        labels=[g.labels[i] for i in survivors] if g.labels is not None else None,
    )
    origin = survivors if g.origin is None else g.origin[survivors]
    return Graph(indptr=sub.indptr, indices=sub.indices, labels=sub.labels, origin=origin)


def largest_connected_component(g: Graph) -> set[int]:
    """Node set of a maximum-size component; ties go to the one containing
    the smallest index."""
    n = g.node_count
    if n == 0:
        return set()
    alive = np.ones(n, dtype=np.bool_)
    labels, sizes = _kernels.component_labels(g.indptr, g.indices, alive)
    if sizes.shape[0] == 0:
        return set()
    best = int(np.argmax(sizes))  # argmax takes the first maximum: smallest member wins
    return set(np.flatnonzero(labels == best).tolist())

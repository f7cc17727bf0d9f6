"""Undirected simple graphs in CSR adjacency form.

Graphs are built from whitespace-separated edge lists (KONECT-style ``%`` or
``#`` comment lines are skipped). Node labels are arbitrary tokens mapped to
contiguous internal indices in first-seen order; self-loops are dropped (and
counted) and duplicate edges collapsed, so the adjacency matrix is always a
symmetric 0/1 matrix. Instances are immutable and safe for concurrent reads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, TextIO

import numpy as np

from pgain import backend
from pgain.errors import ParameterError, ParseError

COMMENT_PREFIXES = ("%", "#")


@dataclass(frozen=True)
class Graph:
    """CSR adjacency of a simple undirected graph.

    ``indptr``/``indices`` follow the usual compressed-row convention: the
    neighbors of internal node ``i`` are ``indices[indptr[i]:indptr[i+1]]``,
    sorted ascending, with every undirected edge stored in both directions.
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: tuple[str, ...]
    self_loops_dropped: int = 0
    duplicates_collapsed: int = 0

    def __post_init__(self):
        if self.indptr.ndim != 1 or self.indices.ndim != 1:
            raise ParameterError("indptr and indices must be 1-d arrays")
        n = self.indptr.size - 1
        if n < 0 or len(self.labels) != n:
            raise ParameterError("label count does not match indptr")
        if self.indptr[0] != 0 or self.indptr[-1] != self.indices.size:
            raise ParameterError("indptr does not span indices")
        if self.indices.size:
            if self.indices.min() < 0 or self.indices.max() >= n:
                raise ParameterError("neighbor index out of range")
            rows = np.repeat(np.arange(n), np.diff(self.indptr))
            if np.any(self.indices == rows):
                raise ParameterError("self-loop present in adjacency")
            inrow = np.ones(self.indices.size, dtype=bool)
            starts = self.indptr[1:-1]
            inrow[starts[starts < self.indices.size]] = False
            if np.any((np.diff(self.indices) <= 0) & inrow[1:]):
                raise ParameterError("neighbor lists must be strictly ascending")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, pairs: Iterable[tuple[object, object]]) -> "Graph":
        """Build a Graph from (label, label) pairs.

        Labels are coerced to ``str`` and indexed in first-seen order.
        Self-loops are dropped (counted), duplicates collapsed.
        """
        index: dict[str, int] = {}
        us: list[int] = []
        vs: list[int] = []
        loops = 0
        for a, b in pairs:
            ia = _intern(index, str(a))
            ib = _intern(index, str(b))
            if ia == ib:
                loops += 1
                continue
            us.append(ia)
            vs.append(ib)
        labels = tuple(index)
        return cls._from_index_pairs(
            np.asarray(us, dtype=np.int64),
            np.asarray(vs, dtype=np.int64),
            labels,
            self_loops_dropped=loops,
        )

    @classmethod
    def _from_index_pairs(cls, us, vs, labels, self_loops_dropped=0) -> "Graph":
        n = len(labels)
        lo = np.minimum(us, vs)
        hi = np.maximum(us, vs)
        if lo.size:
            order = np.lexsort((hi, lo))
            lo, hi = lo[order], hi[order]
            keep = np.ones(lo.size, dtype=bool)
            keep[1:] = (lo[1:] != lo[:-1]) | (hi[1:] != hi[:-1])
            dupes = int(lo.size - keep.sum())
            lo, hi = lo[keep], hi[keep]
        else:
            dupes = 0
        rows = np.concatenate([lo, hi])
        cols = np.concatenate([hi, lo])
        order = np.lexsort((cols, rows))
        rows, cols = rows[order], cols[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
        indices = np.ascontiguousarray(cols, dtype=np.int64)
        indptr.flags.writeable = False
        indices.flags.writeable = False
        return cls(
            indptr=indptr,
            indices=indices,
            labels=labels,
            self_loops_dropped=self_loops_dropped,
            duplicates_collapsed=dupes,
        )

    # -- basic accessors ----------------------------------------------------

    @property
    def node_count(self) -> int:
        return self.indptr.size - 1

    @property
    def edge_count(self) -> int:
        return self.indices.size // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        """Per-node degree, shared read-only array."""
        d = np.diff(self.indptr)
        d.flags.writeable = False
        return d

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def has_edge(self, i: int, j: int) -> bool:
        row = self.neighbors(i)
        pos = np.searchsorted(row, j)
        return pos < row.size and row[pos] == j

    # -- numerics -----------------------------------------------------------

    def spmv(self, x: np.ndarray, scale: float = 1.0,
             out: np.ndarray | None = None) -> np.ndarray:
        """Return ``scale * (A @ x)``.

        Deterministic: per-row summation follows the sorted neighbor order.
        ``out``, when given, must be a float64 buffer of the right length
        not aliasing ``x`` (iteration loops reuse buffers to avoid a fresh
        allocation per product).
        """
        if not math.isfinite(scale):
            raise ParameterError("scale must be finite")
        x = np.ascontiguousarray(x, dtype=np.float64)
        if x.shape != (self.node_count,):
            raise ParameterError(
                f"vector length {x.shape} does not match node count {self.node_count}"
            )
        if out is None:
            out = np.empty(self.node_count, dtype=np.float64)
        else:
            if (out.shape != x.shape or out.dtype != np.float64
                    or not out.flags.c_contiguous):
                raise ParameterError("out must be a contiguous float64 vector")
            if np.shares_memory(out, x):
                raise ParameterError("out must not alias x")
        backend.spmv_csr(self.indptr, self.indices, x, scale, out)
        return out

    # -- serialization ------------------------------------------------------

    def canonical_edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (i, j) internal pairs with i < j, ascending."""
        for i in range(self.node_count):
            for j in self.neighbors(i):
                if i < j:
                    yield i, int(j)

    def to_edge_list_text(self) -> str:
        """Canonical edge list: one line per edge, external labels, ordered
        by the sorted internal pairs. Re-parsing yields an equal labeled
        graph (``equals_labeled``); internal numbering need not survive,
        since re-parsing assigns indices in first-seen order."""
        labels = self.labels
        return "".join(f"{labels[i]} {labels[j]}\n" for i, j in self.canonical_edges())

    def write_edge_list(self, target) -> None:
        text = self.to_edge_list_text()
        if hasattr(target, "write"):
            target.write(text)
        else:
            Path(target).write_text(text)

    def structure_equal(self, other: "Graph") -> bool:
        """Same CSR arrays (labels ignored)."""
        return (
            self.node_count == other.node_count
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def equals_labeled(self, other: "Graph") -> bool:
        """Same labeled graph: equal label sets and equal edge sets."""
        if (
            self.node_count != other.node_count
            or self.edge_count != other.edge_count
            or set(self.labels) != set(other.labels)
        ):
            return False
        theirs = other.label_index
        labels = self.labels
        for i, j in self.canonical_edges():
            if not other.has_edge(theirs[labels[i]], theirs[labels[j]]):
                return False
        return True


def _intern(index: dict, token: str) -> int:
    i = index.get(token)
    if i is None:
        i = len(index)
        index[token] = i
    return i


def parse_edge_list(
    source: str | Path | TextIO | Iterable[str],
    comment_prefixes: tuple[str, ...] = COMMENT_PREFIXES,
    drop_self_loops: bool = True,
) -> Graph:
    """Parse a whitespace-separated edge list into a Graph.

    ``source`` may be a path or an open text stream / iterable of lines. Each
    non-comment, non-blank line must hold at least two tokens (the endpoints);
    trailing fields such as weights or timestamps are ignored. Blank lines are
    skipped. Empty input yields the empty graph. With ``drop_self_loops``
    (default) loop lines are dropped and counted; otherwise a loop is a parse
    error. Endpoints of dropped loops still register their node.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as handle:
            return parse_edge_list(handle, comment_prefixes, drop_self_loops)

    index: dict[str, int] = {}
    us: list[int] = []
    vs: list[int] = []
    loops = 0
    for line_no, line in enumerate(source, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(comment_prefixes):
            continue
        tokens = stripped.split()
        if len(tokens) < 2:
            raise ParseError(
                f"expected two node labels, got {stripped!r}", line_no=line_no
            )
        ia = _intern(index, tokens[0])
        ib = _intern(index, tokens[1])
        if ia == ib:
            if not drop_self_loops:
                raise ParseError(f"self-loop {tokens[0]!r}", line_no=line_no)
            loops += 1
            continue
        us.append(ia)
        vs.append(ib)
    return Graph._from_index_pairs(
        np.asarray(us, dtype=np.int64),
        np.asarray(vs, dtype=np.int64),
        tuple(index),
        self_loops_dropped=loops,
    )


def degree_vector(g: Graph) -> np.ndarray:
    """Per-node degrees (doubles as the DEG centrality baseline)."""
    return g.degrees

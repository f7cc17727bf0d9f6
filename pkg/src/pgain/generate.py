"""Synthetic edge-list generators (deterministic for a given seed).

Node labels are the integers 0..n-1; every generator returns a list of
(u, v) pairs with u != v and no duplicates.
"""

from __future__ import annotations

import math
import random

from pgain.errors import ParameterError


def complete_edges(n: int) -> list[tuple[int, int]]:
    _check_n(n, 2)
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def ring_edges(n: int) -> list[tuple[int, int]]:
    """Cycle C_n."""
    _check_n(n, 3)
    return [(i, (i + 1) % n) for i in range(n)]


def star_edges(leaves: int) -> list[tuple[int, int]]:
    """Star with a center (node 0) and ``leaves`` leaves."""
    _check_n(leaves, 1, "leaves")
    return [(0, i) for i in range(1, leaves + 1)]


def grid_edges(rows: int, cols: int) -> list[tuple[int, int]]:
    """2D grid graph, nodes numbered row-major."""
    _check_n(rows, 1, "rows")
    _check_n(cols, 1, "cols")
    edges = []
    for r in range(rows):
        for c in range(cols):
            node = r * cols + c
            if c + 1 < cols:
                edges.append((node, node + 1))
            if r + 1 < rows:
                edges.append((node, node + cols))
    return edges


def erdos_renyi_edges(n: int, p: float, seed: int = 0) -> list[tuple[int, int]]:
    """G(n, p) by geometric gap skipping, O(expected edges)."""
    _check_n(n, 1)
    if not 0 <= p <= 1:
        raise ParameterError(f"edge probability must lie in [0, 1], got {p}")
    if p == 0:
        return []
    if p == 1:
        return complete_edges(n) if n >= 2 else []
    rng = random.Random(seed)
    edges = []
    log_q = math.log(1.0 - p)
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((v, w))
    return edges


def barabasi_albert_edges(n: int, m0: int, seed: int = 0) -> list[tuple[int, int]]:
    """Preferential attachment: a seed clique of m0+1 nodes, then each new
    node attaches to m0 distinct existing nodes chosen with probability
    proportional to degree."""
    _check_n(m0, 1, "m0")
    if n < m0 + 1:
        raise ParameterError(f"need n >= m0 + 1, got n={n}, m0={m0}")
    rng = random.Random(seed)
    edges = complete_edges(m0 + 1)
    # one entry per degree unit; sampling an index is degree-proportional
    repeated = [u for e in edges for u in e]
    for v in range(m0 + 1, n):
        chosen: set[int] = set()
        while len(chosen) < m0:
            chosen.add(repeated[rng.randrange(len(repeated))])
        for u in sorted(chosen):
            edges.append((u, v))
            repeated.append(u)
        repeated.extend([v] * m0)
    return edges


def edges_to_text(edges: list[tuple[int, int]]) -> str:
    return "".join(f"{u} {v}\n" for u, v in edges)


def _check_n(value: int, minimum: int, name: str = "n") -> None:
    if value < minimum:
        raise ParameterError(f"{name} must be at least {minimum}, got {value}")

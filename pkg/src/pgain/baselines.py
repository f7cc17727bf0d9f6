"""Comparison centralities: degree, Katz, PageRank, communicability.

Katz and communicability use the same one-SpMV-per-term profile as the gain
series; PageRank is the usual damped power iteration on the row-normalized
adjacency (transposed product, so undirected graphs reuse the symmetric
SpMV on a degree-scaled vector).
"""

from __future__ import annotations

import math

import numpy as np

from pgain import spectral
from pgain.errors import ParameterError
from pgain.graph import Graph
from pgain.vectors import CentralityVector

DEFAULT_TOLERANCE = 1e-12
DEFAULT_MAX_ITER = 10_000


def degree_centrality(g: Graph) -> CentralityVector:
    return CentralityVector(
        scores=g.degrees.astype(np.float64), metric="deg", params={}
    )


def katz_centrality(
    g: Graph,
    delta: float,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iter: int = DEFAULT_MAX_ITER,
    lambda1: float | None = None,
) -> CentralityVector:
    """(I - delta A)^(-1) 1 by the fixed-point iteration x <- 1 + delta A x.

    Requires delta in (0, 1/lambda1); lambda1 is estimated when not given.
    Scores are >= 1 everywhere (the series starts at the identity term).
    """
    _check_iteration_args(tolerance, max_iter)
    if not math.isfinite(delta) or delta <= 0:
        raise ParameterError(f"delta must be positive, got {delta}")
    if g.node_count == 0:
        return CentralityVector(np.zeros(0), "katz", {"delta": delta})
    if g.edge_count > 0:
        lam = lambda1 if lambda1 is not None else spectral.power_iteration(g).lambda1
        if lam > 0 and delta >= 1.0 / lam:
            raise ParameterError(
                f"delta {delta} >= 1/lambda1 {1.0 / lam}: series may diverge"
            )

    ones = np.ones(g.node_count)
    x = ones.copy()
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        x_new = ones + g.spmv(x, scale=delta)
        change = float(np.linalg.norm(x_new - x))
        x = x_new
        if change < tolerance * float(np.linalg.norm(x)):
            converged = True
            break
    return CentralityVector(
        scores=x,
        metric="katz",
        params={"delta": delta, "tolerance": tolerance},
        iterations_used=iterations,
        converged=converged,
    )


def pagerank(
    g: Graph,
    alpha: float = 0.85,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iter: int = DEFAULT_MAX_ITER,
) -> CentralityVector:
    """Damped PageRank on the row-normalized adjacency, L1-normalized.

    Degree-0 nodes (possible only via dropped self-loops) teleport uniformly.
    """
    _check_iteration_args(tolerance, max_iter)
    if not 0 < alpha < 1:
        raise ParameterError(f"alpha must lie in (0, 1), got {alpha}")
    n = g.node_count
    if n == 0:
        return CentralityVector(np.zeros(0), "pr", {"alpha": alpha})

    deg = g.degrees.astype(np.float64)
    dangling = deg == 0.0
    inv_deg = np.where(dangling, 0.0, 1.0 / np.where(dangling, 1.0, deg))
    p = np.full(n, 1.0 / n)
    base = (1.0 - alpha) / n
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        spread = g.spmv(p * inv_deg)  # (row-normalized A)^T p
        if dangling.any():
            spread += p[dangling].sum() / n
        p_new = base + alpha * spread
        change = float(np.abs(p_new - p).sum())
        p = p_new
        if change < tolerance:
            converged = True
            break
    p /= p.sum()
    return CentralityVector(
        scores=p,
        metric="pr",
        params={"alpha": alpha, "tolerance": tolerance},
        iterations_used=iterations,
        converged=converged,
    )


def communicability_vector(
    g: Graph,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iter: int = DEFAULT_MAX_ITER,
) -> CentralityVector:
    """exp(A) 1 via its Taylor series, term recurrence s_k = A s_(k-1) / k."""
    _check_iteration_args(tolerance, max_iter)
    n = g.node_count
    if n == 0:
        return CentralityVector(np.zeros(0), "communicability", {})
    term = np.ones(n)  # k = 0 term
    total = term.copy()
    converged = False
    k = 0
    for k in range(1, max_iter + 1):
        term = g.spmv(term, scale=1.0 / k)
        total += term
        if float(np.linalg.norm(term)) < tolerance * float(np.linalg.norm(total)):
            converged = True
            break
    return CentralityVector(
        scores=total,
        metric="communicability",
        params={"tolerance": tolerance},
        iterations_used=k,
        converged=converged,
    )


def _check_iteration_args(tolerance: float, max_iter: int) -> None:
    if tolerance <= 0:
        raise ParameterError("tolerance must be positive")
    if max_iter < 1:
        raise ParameterError("max_iter must be at least 1")

"""Spectral radius and principal eigenvector via shifted power iteration.

The iteration runs on A + I rather than A: on bipartite graphs the spectrum
of A contains -lambda1 and the unshifted iteration need not settle, while
A + I has a unique dominant eigenvalue lambda1 + 1 with the same eigenvector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pgain.errors import ParameterError
from pgain.graph import Graph
from pgain.vectors import CentralityVector

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10_000


@dataclass(frozen=True)
class SpectralEstimate:
    lambda1: float
    eigenvector: np.ndarray  # unit L2 norm, entries >= 0
    iterations: int
    converged: bool
    residual: float  # ||A v - lambda1 v||_2


def power_iteration(
    g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> SpectralEstimate:
    """Estimate lambda1 and its eigenvector.

    Starts from the uniform positive vector and iterates x <- (A+I)x,
    normalized. Stops once the Rayleigh quotient of A is stable to ``tol``
    (relative) and the residual is below ``10 * tol * lambda1``; otherwise
    returns ``converged=False`` after ``max_iter`` rounds.

    On disconnected graphs the estimate belongs to the component with the
    largest spectral radius and the eigenvector is supported there.
    """
    if tol <= 0:
        raise ParameterError("tol must be positive")
    if max_iter < 1:
        raise ParameterError("max_iter must be at least 1")
    n = g.node_count
    if n == 0:
        raise ParameterError("empty graph has no spectrum")

    x = np.full(n, 1.0 / np.sqrt(n))
    lam_prev = np.inf
    lam = 0.0
    residual = np.inf
    for iteration in range(1, max_iter + 1):
        y = g.spmv(x)  # A x
        lam = float(x @ y)
        residual = float(np.linalg.norm(y - lam * x))
        if (
            abs(lam - lam_prev) <= tol * max(abs(lam), 1e-300)
            and residual <= 10.0 * tol * max(lam, 1e-300)
        ):
            return SpectralEstimate(lam, _freeze(x), iteration, True, residual)
        lam_prev = lam
        z = y + x  # (A + I) x, strictly positive throughout
        x = z / np.linalg.norm(z)
    return SpectralEstimate(lam, _freeze(x), max_iter, False, residual)


def eigenvector_centrality(
    g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> CentralityVector:
    """Principal eigenvector of A, unit L2 norm (the EC baseline)."""
    est = power_iteration(g, tol=tol, max_iter=max_iter)
    return CentralityVector(
        scores=est.eigenvector,
        metric="ec",
        params={"tolerance": tol, "lambda1": est.lambda1},
        iterations_used=est.iterations,
        converged=est.converged,
    )


def _freeze(x: np.ndarray) -> np.ndarray:
    v = x.copy()
    v.flags.writeable = False
    return v

"""Result containers shared by the centrality computations."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from pgain.errors import PgainError


@dataclass(frozen=True)
class CentralityVector:
    """Per-node scores plus the parameters that produced them."""

    scores: np.ndarray
    metric: str
    params: dict = field(default_factory=dict)
    iterations_used: int = 0
    converged: bool = True

    def __post_init__(self):
        if not np.all(np.isfinite(self.scores)):
            raise PgainError(f"{self.metric}: non-finite scores")


@dataclass(frozen=True)
class ConvergenceTrace:
    """Relative L2 truncation error of the k-term series, per k.

    ``errors`` holds (k, epsilon) pairs for k = 1 .. iterations used;
    ``reference`` names how the converged value was obtained
    ("dense-oracle" for small graphs, "long-run" otherwise).
    """

    metric: str
    errors: tuple[tuple[int, float], ...]
    params: dict = field(default_factory=dict)
    reference: str = "long-run"

    @property
    def ks(self) -> np.ndarray:
        return np.array([k for k, _ in self.errors], dtype=np.int64)

    @property
    def epsilons(self) -> np.ndarray:
        return np.array([e for _, e in self.errors], dtype=np.float64)

    def to_csv(self) -> str:
        lines = ["k,epsilon"]
        lines += [f"{k},{eps:.17g}" for k, eps in self.errors]
        return "\n".join(lines) + "\n"

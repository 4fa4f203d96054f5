"""Floating-point partial sums of S as an approximate root of ``1 - a + c2 a^2 + c3 a^3 + ...``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .closedform import hyper_catalan
from .errors import DomainError
from .typevec import TypeVec

__all__ = ["SeriesEvaluation", "evaluate_truncated_s", "residual_norm", "DIVERGENCE_WINDOW"]

DIVERGENCE_WINDOW = 5


@dataclass
class SeriesEvaluation:
    value: float
    increments: list[float] = field(default_factory=list)
    diverging: bool = False
    converged: bool = False

    @property
    def levels(self) -> int:
        return len(self.increments) - 1


def evaluate_truncated_s(c: list[float], levels: int, tol: float = 1e-15) -> SeriesEvaluation:
    """Sum ``C_m prod c_k^m_k`` over all types with at most ``levels`` faces.

    ``c[0]`` is the coefficient of ``a^2``.  Increments are recorded per face
    level.  ``diverging`` is set when ``DIVERGENCE_WINDOW`` consecutive
    increments fail to shrink in magnitude; ``converged`` when the last
    increment is below ``tol`` relative to the sum.
    """
    if levels < 0:
        raise DomainError("levels must be >= 0")
    if not all(math.isfinite(x) for x in c):
        raise DomainError("coefficients must be finite")
    active = [(k, x) for k, x in enumerate(c, start=2) if x != 0.0]
    total = 1.0
    increments = [1.0]
    for d in range(1, levels + 1):
        inc = 0.0
        for combo in combinations_with_replacement(active, d):
            m = TypeVec((k, 1) for k, _ in combo)
            inc += hyper_catalan(m) * math.prod(x for _, x in combo)
        total += inc
        increments.append(inc)
    mags = [abs(x) for x in increments[1:]]
    tail = mags[-(DIVERGENCE_WINDOW + 1):]
    diverging = len(tail) == DIVERGENCE_WINDOW + 1 and all(
        b >= a > 0 for a, b in zip(tail, tail[1:])
    )
    converged = bool(mags) and mags[-1] <= tol * max(abs(total), 1.0)
    return SeriesEvaluation(total, increments, diverging, converged or not active)


def residual_norm(c: list[float], alpha: float) -> float:
    """``|1 - alpha + sum_k c_k alpha^k|``."""
    return abs(1.0 - alpha + sum(x * alpha**k for k, x in enumerate(c, start=2)))

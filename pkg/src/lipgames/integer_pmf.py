"""Probability mass functions on a contiguous integer range."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Guard tolerance for the sum-to-one check at construction time.  Exact
#: dynamic programs drift by a few ulps per step, so extremely long
#: recurrences (tens of thousands of steps) stay well inside this bound
#: while genuine normalisation bugs are still caught.  Library tests assert
#: the much tighter 1e-12 normalisation on all documented parameter ranges.
SUM_GUARD_TOL = 1e-9


@dataclass(frozen=True)
class IntegerPmf:
    """Distribution of an integer random variable with contiguous support.

    ``probs[i]`` is the probability of the value ``offset + i``.  The stored
    support is whatever the producing computation yields; tails are never
    trimmed, so identities between different routes to the same law hold
    entry by entry.
    """

    offset: int
    probs: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=np.float64)
        object.__setattr__(self, "probs", probs)
        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("probs must be a non-empty one-dimensional array")
        if np.any(probs < 0.0):
            raise ValueError("probabilities must be nonnegative")
        total = float(probs.sum())
        if abs(total - 1.0) > SUM_GUARD_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")

    @property
    def support_min(self) -> int:
        return self.offset

    @property
    def support_max(self) -> int:
        return self.offset + self.probs.size - 1

    def prob(self, t: int) -> float:
        """P(X = t), zero outside the stored support."""
        i = t - self.offset
        if 0 <= i < self.probs.size:
            return float(self.probs[i])
        return 0.0

    def mean(self) -> float:
        support = np.arange(self.offset, self.offset + self.probs.size)
        return float(support @ self.probs)

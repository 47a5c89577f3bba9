"""Brute-force Lipschitz constants straight from the total-variation definition.

This module is the ground truth for the closed forms: it enumerates
occupancy count vectors of perturbed profiles exactly and maximises the
total variation distance between the two one-player shifts.  It shares no
probabilistic code with the walk or Poisson Binomial modules.

Actions are 0-based throughout the package; the pair of actions the
deviating player toggles between is fixed to (0, 1), which is without loss
of generality by symmetry.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import BudgetExceededError

#: Default ceiling on ``count classes x occupancy states`` handled by the oracle.
DEFAULT_CELL_BUDGET = 10**7


def _check_k(k: int) -> None:
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 2:
        raise ValueError(f"action count must be an integer >= 2, got {k!r}")


def _check_delta(delta: float) -> None:
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta!r}")


@functools.lru_cache(maxsize=None)
def count_vectors(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-part nonnegative compositions of m, in ascending lexicographic order."""
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool) or m < 0:
        raise ValueError(f"total must be a nonnegative integer, got {m!r}")
    _check_k(k)
    m, k = int(m), int(k)

    def rec(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in rec(total - first, parts - 1):
                yield (first,) + rest

    return tuple(rec(m, k))


def count_vector_rank(counts: Sequence[int]) -> int:
    """Lexicographic rank of a composition among all of the same sum and length."""
    counts = tuple(int(c) for c in counts)
    if len(counts) < 2 or any(c < 0 for c in counts):
        raise ValueError(f"count vector must have >= 2 nonnegative parts, got {counts!r}")
    rank = 0
    remaining = sum(counts)
    parts = len(counts)
    for c in counts[:-1]:
        # compositions whose current coordinate is smaller than c
        rank += math.comb(remaining + parts - 1, parts - 1) - math.comb(
            remaining - c + parts - 1, parts - 1
        )
        remaining -= c
        parts -= 1
    return rank


@functools.lru_cache(maxsize=None)
def _add_action_maps(total: int, k: int) -> np.ndarray:
    """Index maps from compositions of ``total`` to ``total + 1`` under adding one action."""
    vecs = count_vectors(total, k)
    maps = np.empty((k, len(vecs)), dtype=np.int64)
    for idx, c in enumerate(vecs):
        for j in range(k):
            bumped = c[:j] + (c[j] + 1,) + c[j + 1 :]
            maps[j, idx] = count_vector_rank(bumped)
    return maps


def perturbed_action_law(j: int, k: int, delta: float) -> np.ndarray:
    """Distribution over the k actions of a delta-perturbed action ``j``.

    The declared action keeps probability ``1 - delta + delta/k``; every
    other action receives ``delta/k``.
    """
    _check_k(k)
    _check_delta(delta)
    if not 0 <= j < k:
        raise ValueError(f"action must lie in 0..{k - 1}, got {j!r}")
    law = np.full(k, delta / k)
    law[j] += 1.0 - delta
    return law


@dataclass(frozen=True)
class CountDistribution:
    """Law of an occupancy vector: probabilities over k-part compositions of m.

    ``probs[r]`` is the probability of the composition with lexicographic
    rank ``r``.
    """

    m: int
    k: int
    probs: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=np.float64)
        object.__setattr__(self, "probs", probs)
        expected = math.comb(self.m + self.k - 1, self.k - 1)
        if probs.shape != (expected,):
            raise ValueError(
                f"expected {expected} probabilities for m={self.m}, k={self.k}, "
                f"got shape {probs.shape}"
            )
        if np.any(probs < 0.0):
            raise ValueError("probabilities must be nonnegative")
        total = float(probs.sum())
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {total!r}, not 1")

    def prob(self, counts: Sequence[int]) -> float:
        counts = tuple(int(c) for c in counts)
        if len(counts) != self.k or sum(counts) != self.m:
            raise ValueError(f"count vector must have {self.k} parts summing to {self.m}")
        return float(self.probs[count_vector_rank(counts)])


def count_distribution(profile: Sequence[int], k: int, delta: float) -> CountDistribution:
    """Law of the occupancy vector of a delta-perturbed pure profile.

    Players are folded in sorted-action order with a fixed scatter order, so
    permutations of the profile yield bit-identical probabilities; the law
    itself depends on the profile only through its action counts.
    """
    _check_k(k)
    _check_delta(delta)
    actions = sorted(int(a) for a in profile)
    if any(not 0 <= a < k for a in actions):
        raise ValueError(f"profile actions must lie in 0..{k - 1}")
    probs = np.array([1.0])
    for t, action in enumerate(actions):
        law = perturbed_action_law(action, k, delta)
        maps = _add_action_maps(t, k)
        nxt = np.zeros(math.comb(t + k, k - 1))
        for j in range(k):
            nxt[maps[j]] += law[j] * probs
        probs = nxt
    return CountDistribution(len(actions), k, probs)


def shifted_tv(dist: CountDistribution, j1: int, j2: int) -> float:
    """TV distance between the occupancy law plus one extra player on j1 vs on j2."""
    for j in (j1, j2):
        if not 0 <= j < dist.k:
            raise ValueError(f"action must lie in 0..{dist.k - 1}, got {j!r}")
    if j1 == j2:
        return 0.0
    maps = _add_action_maps(dist.m, dist.k)
    size = math.comb(dist.m + dist.k, dist.k - 1)
    first = np.zeros(size)
    second = np.zeros(size)
    first[maps[j1]] = dist.probs
    second[maps[j2]] = dist.probs
    return 0.5 * float(np.abs(first - second).sum())


class OracleResult(NamedTuple):
    value: float
    worst_class: tuple[int, ...]


def lipschitz_oracle(
    n: int, k: int, delta: float, cell_budget: int = DEFAULT_CELL_BUDGET
) -> OracleResult:
    """Worst-case Lipschitz constant by exhaustive count-class enumeration.

    Maximises ``(1 - delta) * shifted_tv(...)`` over every count class of
    the n - 2 non-deviating players.  Profiles are enumerated only up to
    action counts (anonymity makes the objective class-invariant, which is
    tested separately), keeping the search exact at desk scale.  The witness
    is the lexicographically smallest class within 1e-12 of the maximum, so
    exact ties are not decided by rounding noise.  Instances whose
    ``classes x states`` product exceeds ``cell_budget`` are refused.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 2:
        raise ValueError(f"player count must be an integer >= 2, got {n!r}")
    _check_k(k)
    _check_delta(delta)
    m = n - 2
    cells = math.comb(m + k - 1, k - 1) * math.comb(m + k, k - 1)
    if cells > cell_budget:
        raise BudgetExceededError(
            f"oracle instance needs {cells} cells, over the budget of {cell_budget}"
        )
    classes = count_vectors(m, k)
    values = np.empty(len(classes))
    for idx, counts in enumerate(classes):
        profile = [j for j, c in enumerate(counts) for _ in range(c)]
        values[idx] = shifted_tv(count_distribution(profile, k, delta), 0, 1)
    best = float(values.max())
    witness = classes[int(np.argmax(values >= best - 1e-12))]
    return OracleResult((1.0 - delta) * best, witness)

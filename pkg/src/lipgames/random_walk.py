"""Exact distributions for the lazy symmetric random walk on the integers.

The walk starts at 0 and at each step stays put with probability ``1 - r``
and moves +1 or -1 with probability ``r/2`` each, for a rate ``r`` in
``(0, 1]``.  All quantities are computed by exact dynamic programming over
the full support; nothing is sampled or truncated.
"""

from __future__ import annotations

import numpy as np

from .integer_pmf import IntegerPmf


def _check_params(n: int, r: float) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise ValueError(f"step count must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    if not 0.0 < r <= 1.0:
        raise ValueError(f"rate must lie in (0, 1], got {r!r}")


def walk_pmf(n: int, r: float) -> IntegerPmf:
    """Law of the walk position after ``n`` steps.

    The support is ``[-n, n]`` and the pmf is symmetric about 0 entry by
    entry: the update adds the two outer neighbours together before scaling,
    so mirrored positions see bitwise-identical arithmetic.
    """
    _check_params(n, r)
    hold = 1.0 - r
    half = 0.5 * r
    probs = np.array([1.0])
    for _ in range(n):
        size = probs.size
        nxt = np.zeros(size + 2)
        nxt[1:-1] = hold * probs
        side = np.zeros(size + 2)
        side[:-2] += probs
        side[2:] += probs
        nxt += half * side
        probs = nxt
    return IntegerPmf(-n, probs)


def point_prob(n: int, r: float, t: int) -> float:
    """P(walk is at ``t`` after ``n`` steps); zero outside ``[-n, n]``."""
    return walk_pmf(n, r).prob(t)


def passage_prob(n: int, r: float) -> float:
    """P(walk is in {0, 1} after ``n`` steps).

    By the reflection principle this equals the probability that the walk
    stays strictly below 1 for all of the first ``n`` steps; the library
    computes that second quantity independently in :func:`stay_below_prob`
    and tests their agreement.
    """
    pmf = walk_pmf(n, r)
    return pmf.prob(0) + pmf.prob(1)


def stay_below_prob(n: int, r: float) -> float:
    """P(walk is strictly below 1 at every one of the first ``n`` steps).

    Computed with an absorbing barrier at +1: mass that would step onto +1
    is removed, and the survivor mass after ``n`` steps is returned.  The
    recursion shares no code with :func:`walk_pmf`.
    """
    _check_params(n, r)
    hold = 1.0 - r
    half = 0.5 * r
    # alive[i] = P(not yet absorbed, position i - n); positions -n..0.
    alive = np.zeros(n + 1)
    alive[n] = 1.0
    for _ in range(n):
        nxt = hold * alive
        nxt[:-1] += half * alive[1:]
        nxt[1:] += half * alive[:-1]
        alive = nxt
    return float(alive.sum())

"""Poisson Binomial distributions and the two-action worst-case statistics.

A Poisson Binomial (PB) variable here is a sum of independent Bernoulli
terms, each optionally negated, plus an integer shift.  Pmfs are exact
sequential convolutions.  The module also provides the two quantities that
drive the two-action Lipschitz analysis: the largest point probability of a
split Bernoulli sum (:func:`two_block_max_prob`) and the probability that
two i.i.d. binomials coincide (:func:`binomial_collision_prob`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .errors import IntegrityError
from .integer_pmf import IntegerPmf

#: Tolerance for agreement between redundant computations of the same value.
DUAL_ROUTE_TOL = 1e-12


def _check_terms(probs, signs):
    probs = np.asarray(probs, dtype=np.float64)
    if probs.ndim != 1:
        raise ValueError("success probabilities must form a one-dimensional sequence")
    if np.any((probs < 0.0) | (probs > 1.0)):
        raise ValueError("success probabilities must lie in [0, 1]")
    if signs is None:
        signs = np.ones(probs.size, dtype=np.int64)
    else:
        signs = np.asarray(signs, dtype=np.int64)
        if signs.shape != probs.shape:
            raise ValueError("signs must match the probabilities in length")
        if np.any(np.abs(signs) != 1):
            raise ValueError("signs must be +1 or -1")
    return probs, signs


def _check_count_delta(n: int, delta: float) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 0:
        raise ValueError(f"term count must be a nonnegative integer, got {n!r}")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta!r}")


def pb_pmf(probs, shift: int = 0, signs=None) -> IntegerPmf:
    """Exact pmf of ``sum_i signs[i] * Bernoulli(probs[i]) + shift``.

    The support has ``len(probs) + 1`` points; negated terms extend it
    downward instead of upward.
    """
    probs, signs = _check_terms(probs, signs)
    pmf = np.array([1.0])
    offset = int(shift)
    for p, s in zip(probs, signs):
        if s > 0:
            kernel = np.array([1.0 - p, p])
        else:
            kernel = np.array([p, 1.0 - p])  # values -1 and 0
            offset -= 1
        pmf = np.convolve(pmf, kernel)
    return IntegerPmf(offset, pmf)


def pb_mode(probs, shift: int = 0, signs=None) -> int:
    """Most probable value of the PB variable; ties break to the smaller one."""
    dist = pb_pmf(probs, shift, signs)
    return dist.offset + int(np.argmax(dist.probs))


def unit_shift_tv(probs, shift: int = 0, signs=None) -> float:
    """Total variation distance between a PB variable X and X + 1.

    Computed two independent ways: the largest point probability (PB laws
    are unimodal, so the up-and-down L1 telescopes to twice the peak) and
    half the L1 distance between the pmf and its unit shift.  Disagreement
    beyond ``DUAL_ROUTE_TOL`` raises :class:`IntegrityError`.
    """
    dist = pb_pmf(probs, shift, signs)
    by_peak = float(dist.probs.max())
    padded = np.zeros(dist.probs.size + 1)
    shifted = np.zeros(dist.probs.size + 1)
    padded[:-1] = dist.probs
    shifted[1:] = dist.probs
    by_l1 = 0.5 * float(np.abs(padded - shifted).sum())
    if abs(by_peak - by_l1) > DUAL_ROUTE_TOL:
        raise IntegrityError(
            f"shift-TV routes disagree: peak {by_peak!r} vs half-L1 {by_l1!r}"
        )
    return by_peak


def normal_approx_error(probs, shift: int = 0, signs=None) -> tuple[float, float]:
    """Worst-case gap between the scaled pmf and the standard normal density.

    Returns ``(max_t |sigma * P(X = t) - phi((t - mu) / sigma)|, sigma)``
    with the maximum over the support, ``phi(x) = exp(-x^2/2) / sqrt(2 pi)``.
    Degenerate variance is rejected.
    """
    probs_, signs_ = _check_terms(probs, signs)
    var = float(np.sum(probs_ * (1.0 - probs_)))
    if var <= 0.0:
        raise ValueError("variance is zero; there is no normal scale to compare against")
    sigma = math.sqrt(var)
    mu = float(shift + np.sum(signs_ * probs_))
    dist = pb_pmf(probs, shift, signs)
    support = np.arange(dist.offset, dist.offset + dist.probs.size)
    z = (support - mu) / sigma
    density = np.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi)
    gap = np.abs(sigma * dist.probs - density)
    return float(gap.max()), sigma


@dataclass(frozen=True)
class TwoBlockMax:
    """Largest point probability of a split Bernoulli sum.

    ``split`` terms count successes and the remaining terms count failures;
    ``point`` is the outcome attaining the maximum probability ``value``.
    """

    value: float
    split: int
    point: int


def _bernoulli_sum_pmfs(n: int, p: float) -> list[np.ndarray]:
    """Pmfs of Binomial(l, p) for every l in 0..n, by incremental convolution."""
    out = [np.array([1.0])]
    kernel = np.array([1.0 - p, p])
    for _ in range(n):
        out.append(np.convolve(out[-1], kernel))
    return out


def two_block_max_prob(n: int, delta: float) -> TwoBlockMax:
    """Maximum point probability over all two-block Bernoulli sums of ``n`` terms.

    For a split ``l``, the first ``l`` of ``n`` i.i.d. Bernoulli(delta/2)
    terms are counted as successes and the remaining ``n - l`` as failures,
    so the sum is Binomial(l, delta/2) + Binomial(n - l, 1 - delta/2) on
    {0..n}.  The maximum runs over every split and every outcome.  Ties
    resolve to the larger split, then to the smaller outcome.  ``n = 0``
    gives probability 1 at outcome 0.
    """
    _check_count_delta(n, delta)
    q = 0.5 * delta
    successes = _bernoulli_sum_pmfs(n, q)
    failures = _bernoulli_sum_pmfs(n, 1.0 - q)
    best_value = -1.0
    best_split = -1
    best_point = -1
    for split in range(n, -1, -1):
        pmf = np.convolve(successes[split], failures[n - split])
        point = int(np.argmax(pmf))
        value = float(pmf[point])
        if value > best_value:
            best_value = value
            best_split = split
            best_point = point
    return TwoBlockMax(best_value, best_split, best_point)


def binomial_collision_prob(n: int, delta: float) -> float:
    """Probability that two independent Binomial(n, delta/2) draws coincide.

    Equals the sum of squared binomial point probabilities, and also the
    probability that a lazy walk with rate ``delta * (1 - delta/2)`` sits at
    the origin after ``n`` steps; the walk identity is exercised in tests.
    """
    _check_count_delta(n, delta)
    pmf = stats.binom.pmf(np.arange(n + 1), n, 0.5 * delta)
    return float(np.dot(pmf, pmf))

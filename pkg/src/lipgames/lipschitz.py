"""Worst-case Lipschitz constants of delta-perturbed anonymous games.

The constant ``lambda(n, k, delta)`` is the largest influence one player's
action can have on another player's expected payoff across all n-player
k-action anonymous games once every action is delta-perturbed.  For three
or more actions it equals ``(1 - delta)`` times a passage probability of a
lazy walk; for two actions it is driven by the split Bernoulli maximum of
:mod:`lipgames.poisson_binomial`, exactly for all n, with a closed walk
formula at even n and a bracket from the adjacent even values at odd n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import poisson_binomial as pb
from . import random_walk as rw
from .errors import IntegrityError

METHOD_WALK = "walk-closed-form"
METHOD_TWO_BLOCK = "two-block-exact"
METHOD_EVEN_WALK = "even-walk"
METHOD_ODD_BRACKET = "odd-bracket"
METHOD_ORACLE = "oracle"

#: Largest n for which the dispatcher runs the O(n^3) exact split maximum
#: for two-action games.  Beyond it, even n uses the equivalent walk
#: formula and odd n reports the bracket midpoint.
TWO_ACTION_EXACT_LIMIT = 256

_BRACKET_SLACK = 1e-9


def _check_args(n: int, k: int, delta: float, min_players: int = 2) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < min_players:
        raise ValueError(f"player count must be an integer >= {min_players}, got {n!r}")
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 2:
        raise ValueError(f"action count must be an integer >= 2, got {k!r}")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta!r}")


@dataclass(frozen=True)
class LambdaResult:
    """A computed Lipschitz constant with its bracket and provenance tag.

    ``lower == upper == value`` for every method except ``odd-bracket``,
    where the bracket comes from the adjacent even player counts and
    ``value`` is either the exact constant (small n) or the geometric
    bracket midpoint (large n).
    """

    value: float
    lower: float
    upper: float
    method: str
    asymptotic: Optional[float] = None

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ValueError(f"bracket is inverted: [{self.lower}, {self.upper}]")
        if not (self.lower - _BRACKET_SLACK <= self.value <= self.upper + _BRACKET_SLACK):
            raise ValueError(
                f"value {self.value} falls outside the bracket [{self.lower}, {self.upper}]"
            )
        if self.method != METHOD_ODD_BRACKET and not self.lower == self.value == self.upper:
            raise ValueError(f"method {self.method!r} must carry a degenerate bracket")


def asymptotic_estimate(n: int, k: int, delta: float) -> float:
    """Closed-form large-n approximation of the Lipschitz constant.

    The exact constant divided by this estimate tends to 1 as
    ``n * delta / k`` grows.
    """
    _check_args(n, k, delta, min_players=1)
    if k >= 3:
        return (1.0 - delta) * math.sqrt(k / (math.pi * n * delta))
    return (1.0 - delta) / math.sqrt(math.pi * n * delta * (1.0 - 0.5 * delta))


def lipschitz_multi_action(n: int, k: int, delta: float) -> LambdaResult:
    """Exact constant for k >= 3 actions: a scaled walk passage probability.

    ``(1 - delta) * P(walk with rate 2*delta/k is in {0, 1} after n - 2 steps)``.
    """
    _check_args(n, k, delta)
    if k < 3:
        raise ValueError("k must be at least 3; use the two-action routines for k = 2")
    value = (1.0 - delta) * rw.passage_prob(n - 2, 2.0 * delta / k)
    return LambdaResult(value, value, value, METHOD_WALK, asymptotic_estimate(n, k, delta))


def lipschitz_two_action(n: int, delta: float) -> LambdaResult:
    """Exact two-action constant for any n, even or odd.

    ``(1 - delta)`` times the split Bernoulli maximum over n - 2 terms.
    The split scan costs O(n^3); prefer :func:`lipschitz_two_action_even`
    for large even n.
    """
    _check_args(n, 2, delta)
    block = pb.two_block_max_prob(n - 2, delta)
    value = (1.0 - delta) * block.value
    return LambdaResult(value, value, value, METHOD_TWO_BLOCK, asymptotic_estimate(n, 2, delta))


def lipschitz_two_action_even(n: int, delta: float) -> float:
    """Exact two-action constant at even n via the walk point formula.

    ``(1 - delta) * P(walk with rate delta*(1 - delta/2) is at 0 after
    n/2 - 1 steps)``; agrees with :func:`lipschitz_two_action` and costs
    O(n^2).
    """
    _check_args(n, 2, delta)
    if n % 2:
        raise ValueError(f"player count must be even, got {n}")
    rate = delta * (1.0 - 0.5 * delta)
    return (1.0 - delta) * rw.point_prob(n // 2 - 1, rate, 0)


def two_action_odd_bracket(n: int, delta: float) -> tuple[float, float]:
    """Bracket for the two-action constant at odd n from the even neighbours.

    The lower end is the constant at n + 1 players; the upper end is the
    geometric mean of the constants at n - 1 and n + 1 players.  The exact
    value always lies inside.
    """
    _check_args(n, 2, delta, min_players=3)
    if n % 2 == 0:
        raise ValueError(f"player count must be odd, got {n}")
    lower = lipschitz_two_action_even(n + 1, delta)
    upper = math.sqrt(lipschitz_two_action_even(n - 1, delta) * lower)
    return lower, upper


def lipschitz_constant(n: int, k: int, delta: float) -> LambdaResult:
    """Worst-case Lipschitz constant, dispatching on the action count.

    k >= 3 always uses the exact walk formula.  For k = 2, even n up to
    ``TWO_ACTION_EXACT_LIMIT`` uses the exact split maximum and larger even
    n the equivalent walk formula; odd n carries the even-neighbour bracket,
    with the exact value up to the limit and the geometric midpoint beyond.
    """
    _check_args(n, k, delta)
    if k >= 3:
        return lipschitz_multi_action(n, k, delta)
    estimate = asymptotic_estimate(n, 2, delta)
    if n % 2 == 0:
        if n <= TWO_ACTION_EXACT_LIMIT:
            return lipschitz_two_action(n, delta)
        value = lipschitz_two_action_even(n, delta)
        return LambdaResult(value, value, value, METHOD_EVEN_WALK, estimate)
    lower, upper = two_action_odd_bracket(n, delta)
    if n <= TWO_ACTION_EXACT_LIMIT:
        value = lipschitz_two_action(n, delta).value
    else:
        value = math.sqrt(lower * upper)
    return LambdaResult(value, lower, upper, METHOD_ODD_BRACKET, estimate)


class FixedPoint(NamedTuple):
    delta: float
    value: float


def delta_fixed_point(n: int, k: int, tol: float = 1e-10, max_iter: int = 200) -> FixedPoint:
    """Solve ``lipschitz_constant(n, k, delta) = delta`` for delta by bisection.

    Returns ``(delta, value)`` with ``|value - delta| <= tol``.  The gap
    ``lambda - delta`` is positive near 0 and negative near 1, which
    brackets a root; monotonicity in delta is not assumed, so the residual
    is verified instead of claiming uniqueness.  Perturbing every action by
    this delta leaves some profile within ``2 * k * value`` of a best
    response, hence a ``2 * delta``-equilibrium of the perturbed game.
    """
    _check_args(n, k, 0.5)
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    lo, hi = 1e-9, 1.0 - 1e-9

    def gap(d: float) -> float:
        return lipschitz_constant(n, k, d).value - d

    if gap(lo) <= 0.0 or gap(hi) >= 0.0:
        raise IntegrityError("fixed-point gap does not change sign over (0, 1)")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        g = gap(mid)
        if abs(g) <= tol:
            return FixedPoint(mid, g + mid)
        if g > 0.0:
            lo = mid
        else:
            hi = mid
    raise IntegrityError(f"bisection failed to reach residual {tol} in {max_iter} iterations")

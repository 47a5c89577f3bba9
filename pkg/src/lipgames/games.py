"""Anonymous games: exact perturbed payoffs, regrets, and equilibrium search.

A game is anonymous when a player's payoff depends on their own action and
on how many opponents play each action, never on which opponents.  Payoffs
are stored as a dense table indexed by (player, own action, lexicographic
rank of the opponents' count vector).

``delta = 0`` is accepted everywhere in this module and means the
unperturbed game; ``delta > 0`` evaluates expectations under the perturbed
profile exactly, via the count-vector dynamic program of
:mod:`lipgames.oracle`.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import BudgetExceededError
from .oracle import count_distribution, count_vector_rank

#: Default ceiling on the number of profiles an exhaustive scan may visit.
DEFAULT_PROFILE_BUDGET = 10**7


@dataclass(frozen=True)
class AnonymousGame:
    """n-player, k-action anonymous game with payoffs in [0, 1].

    ``payoffs[i, j, r]`` is player i's payoff for own action j when the
    opponents' count vector has lexicographic rank r among the k-part
    compositions of n - 1.
    """

    n: int
    k: int
    payoffs: np.ndarray

    def __post_init__(self):
        if self.n < 2 or self.k < 2:
            raise ValueError("a game needs at least 2 players and 2 actions")
        payoffs = np.asarray(self.payoffs, dtype=np.float64)
        object.__setattr__(self, "payoffs", payoffs)
        classes = math.comb(self.n - 1 + self.k - 1, self.k - 1)
        if payoffs.shape != (self.n, self.k, classes):
            raise ValueError(
                f"payoff table must have shape ({self.n}, {self.k}, {classes}), "
                f"got {payoffs.shape}"
            )
        if np.any((payoffs < 0.0) | (payoffs > 1.0)):
            raise ValueError("payoffs must lie in [0, 1]")


@dataclass(frozen=True)
class RegretReport:
    """Per-player best deviations and regrets for one profile."""

    max_regret: float
    per_player: tuple[tuple[int, float], ...]


class SearchResult(NamedTuple):
    profile: tuple[int, ...]
    report: RegretReport


def _check_profile(game: AnonymousGame, profile: Sequence[int]) -> tuple[int, ...]:
    profile = tuple(int(a) for a in profile)
    if len(profile) != game.n:
        raise ValueError(f"profile must list {game.n} actions, got {len(profile)}")
    if any(not 0 <= a < game.k for a in profile):
        raise ValueError(f"profile actions must lie in 0..{game.k - 1}")
    return profile


def _check_delta(delta: float) -> None:
    if not 0.0 <= delta < 1.0:
        raise ValueError(f"delta must lie in [0, 1), got {delta!r}")


def _declared_values(game: AnonymousGame, profile, player: int, delta: float) -> np.ndarray:
    """Expected payoff of declaring each pure action, own perturbation included.

    The opponents keep their (perturbed) profile; entry b is the payoff of
    announcing b, i.e. playing b with probability 1 - delta and a uniform
    action otherwise.
    """
    others = profile[:player] + profile[player + 1 :]
    if delta == 0.0:
        counts = [0] * game.k
        for a in others:
            counts[a] += 1
        rank = count_vector_rank(counts)
        return game.payoffs[player, :, rank].copy()
    dist = count_distribution(others, game.k, delta)
    base = game.payoffs[player] @ dist.probs
    return (1.0 - delta) * base + (delta / game.k) * base.sum()


def perturbed_payoff(game: AnonymousGame, profile: Sequence[int], player: int, delta: float) -> float:
    """Exact expected payoff of ``player`` when every action is delta-perturbed."""
    profile = _check_profile(game, profile)
    _check_delta(delta)
    if not 0 <= player < game.n:
        raise ValueError(f"player must lie in 0..{game.n - 1}, got {player!r}")
    return float(_declared_values(game, profile, player, delta)[profile[player]])


def payoff(game: AnonymousGame, profile: Sequence[int], player: int) -> float:
    """Unperturbed payoff of ``player`` under a pure profile."""
    return perturbed_payoff(game, profile, player, 0.0)


def regret(game: AnonymousGame, profile: Sequence[int], delta: float) -> RegretReport:
    """Best pure-deviation gain per player in the delta-perturbed game.

    Pure deviations suffice: regret against an arbitrary mixed deviation is
    a convex combination of the pure ones.  Regrets are exactly nonnegative
    because staying put is always a candidate deviation.
    """
    profile = _check_profile(game, profile)
    _check_delta(delta)
    per_player = []
    worst = 0.0
    for i in range(game.n):
        values = _declared_values(game, profile, i, delta)
        best = int(np.argmax(values))
        gain = float(values[best] - values[profile[i]])
        per_player.append((best, gain))
        worst = max(worst, gain)
    return RegretReport(worst, tuple(per_player))


def regret_in_unperturbed(game: AnonymousGame, profile: Sequence[int], delta: float) -> float:
    """Largest unperturbed-game gain from abandoning the perturbed strategy.

    Every other player keeps playing their delta-perturbed action; the
    deviator compares their perturbed strategy against the best pure action
    evaluated in the original game.  If the profile has regret eps in the
    perturbed game, this never exceeds delta + eps.
    """
    profile = _check_profile(game, profile)
    _check_delta(delta)
    worst = 0.0
    for i in range(game.n):
        others = profile[:i] + profile[i + 1 :]
        if delta == 0.0:
            counts = [0] * game.k
            for a in others:
                counts[a] += 1
            base = game.payoffs[i, :, count_vector_rank(counts)]
        else:
            base = game.payoffs[i] @ count_distribution(others, game.k, delta).probs
        current = (1.0 - delta) * base[profile[i]] + (delta / game.k) * base.sum()
        worst = max(worst, float(base.max() - current))
    return worst


def find_eps_nash(
    game: AnonymousGame,
    delta: float,
    eps: float,
    profile_budget: int = DEFAULT_PROFILE_BUDGET,
) -> Optional[SearchResult]:
    """First profile (lexicographically) whose perturbed regret is at most eps.

    Scans all ``k**n`` pure profiles and returns ``None`` only after the
    whole space has been checked, certifying that no pure eps-equilibrium of
    the delta-perturbed game exists.  Instances with more than
    ``profile_budget`` profiles are refused.
    """
    _check_delta(delta)
    if eps < 0.0:
        raise ValueError(f"eps must be nonnegative, got {eps!r}")
    total = game.k**game.n
    if total > profile_budget:
        raise BudgetExceededError(
            f"{total} profiles exceed the scan budget of {profile_budget}"
        )
    for profile in itertools.product(range(game.k), repeat=game.n):
        admissible = True
        for i in range(game.n):
            values = _declared_values(game, profile, i, delta)
            if float(values.max() - values[profile[i]]) > eps:
                admissible = False
                break
        if admissible:
            return SearchResult(profile, regret(game, profile, delta))
    return None


def party_game(n: int, preferences: Sequence[str]) -> AnonymousGame:
    """Two-action party game: action 0 attends, action 1 stays home.

    An attending player receives 1 when the attendee count (self included)
    has the parity they prefer and 0 otherwise; staying home always pays
    1/2.  The 1/2 keeps staying from being dominant, so with at least one
    "even" and one "odd" player no pure profile gets every regret below
    1/2 in the unperturbed game.

    ``preferences`` lists "even" or "odd" per player.
    """
    if n < 2:
        raise ValueError(f"the party needs at least 2 players, got {n}")
    preferences = list(preferences)
    if len(preferences) != n:
        raise ValueError(f"need one preference per player, got {len(preferences)}")
    if any(p not in ("even", "odd") for p in preferences):
        raise ValueError('preferences must be "even" or "odd"')
    # Rank r of the opponents' count vector (attendees, stayers) is just the
    # number of attending opponents.
    payoffs = np.zeros((n, 2, n))
    attendees = np.arange(n) + 1
    for i, pref in enumerate(preferences):
        want = 0 if pref == "even" else 1
        payoffs[i, 0, :] = (attendees % 2 == want).astype(np.float64)
        payoffs[i, 1, :] = 0.5
    return AnonymousGame(n, 2, payoffs)


def random_game(n: int, k: int, seed: int) -> AnonymousGame:
    """Anonymous game with payoffs drawn i.i.d. uniform on [0, 1] from ``seed``."""
    rng = np.random.default_rng(seed)
    classes = math.comb(n - 1 + k - 1, k - 1)
    return AnonymousGame(n, k, rng.random((n, k, classes)))


def game_to_dict(game: AnonymousGame) -> dict:
    """Plain-JSON representation: fields n, k, payoffs[player][action][rank]."""
    return {"n": game.n, "k": game.k, "payoffs": game.payoffs.tolist()}


def parse_game(obj: dict) -> AnonymousGame:
    """Validate and build a game from its plain-JSON representation."""
    if not isinstance(obj, dict):
        raise ValueError("game document must be a JSON object")
    for field in ("n", "k", "payoffs"):
        if field not in obj:
            raise ValueError(f"game document is missing the field {field!r}")
    n, k = obj["n"], obj["k"]
    if not isinstance(n, int) or not isinstance(k, int):
        raise ValueError("fields n and k must be integers")
    payoffs = obj["payoffs"]
    classes = math.comb(n - 1 + k - 1, k - 1) if n >= 2 and k >= 2 else 0
    if not isinstance(payoffs, list) or len(payoffs) != n:
        raise ValueError(f"payoffs must list {n} players")
    for i, per_player in enumerate(payoffs):
        if not isinstance(per_player, list) or len(per_player) != k:
            raise ValueError(f"payoffs[{i}] must list {k} actions")
        for j, per_action in enumerate(per_player):
            if not isinstance(per_action, list) or len(per_action) != classes:
                raise ValueError(
                    f"payoffs[{i}][{j}] must list {classes} count-vector ranks"
                )
    return AnonymousGame(n, k, np.asarray(payoffs, dtype=np.float64))


def load_game(path) -> AnonymousGame:
    """Read a game document from a JSON file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_game(json.load(handle))

"""Worst-case Lipschitz constants of delta-perturbed anonymous games.

The library computes the largest influence a single opponent can have on a
player's expected payoff in any n-player, k-action anonymous game once all
actions are delta-perturbed, exactly and at scale, together with everything
needed to check it: an independent brute-force oracle, the lazy-walk and
Poisson Binomial machinery behind the closed forms, a seeded Monte Carlo
coupling, and exhaustive approximate-equilibrium search on small games.
"""

from .coupling import (
    CouplingEstimate,
    MeetTimeResult,
    mirrored_action_counts,
    simulate_coupling,
    simulate_meet_time,
)
from .errors import BudgetExceededError, IntegrityError
from .games import (
    AnonymousGame,
    RegretReport,
    SearchResult,
    find_eps_nash,
    game_to_dict,
    load_game,
    parse_game,
    party_game,
    payoff,
    perturbed_payoff,
    random_game,
    regret,
    regret_in_unperturbed,
)
from .integer_pmf import IntegerPmf
from .lipschitz import (
    FixedPoint,
    LambdaResult,
    asymptotic_estimate,
    delta_fixed_point,
    lipschitz_constant,
    lipschitz_multi_action,
    lipschitz_two_action,
    lipschitz_two_action_even,
    two_action_odd_bracket,
)
from .oracle import (
    CountDistribution,
    OracleResult,
    count_distribution,
    count_vector_rank,
    count_vectors,
    lipschitz_oracle,
    perturbed_action_law,
    shifted_tv,
)
from .poisson_binomial import (
    TwoBlockMax,
    binomial_collision_prob,
    normal_approx_error,
    pb_mode,
    pb_pmf,
    two_block_max_prob,
    unit_shift_tv,
)
from .random_walk import passage_prob, point_prob, stay_below_prob, walk_pmf

__version__ = "0.1.0"

__all__ = [
    "AnonymousGame",
    "BudgetExceededError",
    "CountDistribution",
    "CouplingEstimate",
    "FixedPoint",
    "IntegerPmf",
    "IntegrityError",
    "LambdaResult",
    "MeetTimeResult",
    "OracleResult",
    "RegretReport",
    "SearchResult",
    "TwoBlockMax",
    "asymptotic_estimate",
    "binomial_collision_prob",
    "count_distribution",
    "count_vector_rank",
    "count_vectors",
    "delta_fixed_point",
    "find_eps_nash",
    "game_to_dict",
    "lipschitz_constant",
    "lipschitz_multi_action",
    "lipschitz_oracle",
    "lipschitz_two_action",
    "lipschitz_two_action_even",
    "load_game",
    "mirrored_action_counts",
    "normal_approx_error",
    "parse_game",
    "party_game",
    "passage_prob",
    "payoff",
    "pb_mode",
    "pb_pmf",
    "perturbed_action_law",
    "perturbed_payoff",
    "point_prob",
    "random_game",
    "regret",
    "regret_in_unperturbed",
    "shifted_tv",
    "simulate_coupling",
    "simulate_meet_time",
    "stay_below_prob",
    "two_action_odd_bracket",
    "two_block_max_prob",
    "unit_shift_tv",
    "walk_pmf",
]

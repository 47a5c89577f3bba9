"""Why perturbation buys equilibria: the party game.

Some guests prefer parties with an even headcount, some odd.  Unperturbed,
somebody always regrets their choice by at least 1/2, no matter the
profile and no matter how many guests there are.  Once everyone trembles
with probability delta, the game's Lipschitz constant collapses and a
profile withstanding every deviation up to 2*k*lambda exists; it is also
(delta + regret)-stable for the original game.
"""

import itertools

from lipgames import (
    find_eps_nash,
    lipschitz_constant,
    party_game,
    regret,
    regret_in_unperturbed,
)

N = 6
PREFS = ["even", "odd"] * (N // 2)
game = party_game(N, PREFS)
print(f"{N} guests, preferences {PREFS}")

worst_best = min(
    regret(game, profile, 0.0).max_regret
    for profile in itertools.product((0, 1), repeat=N)
)
print(f"unperturbed: best achievable max-regret over all profiles = {worst_best}")
print("  -> no pure profile gets below 1/2; the game has no near-equilibrium")

for delta in (0.1, 0.3):
    lam = lipschitz_constant(N, 2, delta).value
    eps = 2 * 2 * lam
    found = find_eps_nash(game, delta, eps)
    print(f"\ndelta = {delta}: lambda = {lam:.6f}, auto eps = 2k*lambda = {eps:.6f}")
    if found is None:
        print("  no profile found (unexpected)")
        continue
    translated = regret_in_unperturbed(game, found.profile, delta)
    print(f"  profile {found.profile} has perturbed regret {found.report.max_regret:.6f}")
    print(
        f"  in the original game the perturbed profile is "
        f"{delta + found.report.max_regret:.6f}-stable (measured: {translated:.6f})"
    )

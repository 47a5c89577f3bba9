"""The worst-case Lipschitz constant and its large-n behaviour.

Perturbing every action with probability delta caps how much one player can
sway another's payoff in any anonymous game.  The cap has closed forms: a
walk passage probability for three or more actions, the split-sum maximum
for two.  It decays like 1/sqrt(n * delta / k), and the point where the cap
equals delta itself gives the perturbation level with a self-justifying
equilibrium guarantee.
"""

from lipgames import (
    asymptotic_estimate,
    delta_fixed_point,
    lipschitz_constant,
    two_action_odd_bracket,
)

print("lambda(n, k, delta) at delta = 0.3:")
print("     n    k=2           k=3           k=5")
for n in (2, 4, 8, 16, 64, 256):
    row = [lipschitz_constant(n, k, 0.3).value for k in (2, 3, 5)]
    print(f"  {n:4d}  " + "  ".join(f"{v:.10f}" for v in row))

print("\nodd two-action counts carry a bracket from their even neighbours:")
for n in (5, 9, 15):
    res = lipschitz_constant(n, 2, 0.3)
    lo, hi = two_action_odd_bracket(n, 0.3)
    print(f"  n={n:2d}: exact {res.value:.8f} in [{lo:.8f}, {hi:.8f}]  ({res.method})")

print("\nratio to the closed-form estimate tends to 1 as n*delta/k grows:")
print("      n     k=3 ratio     k=2 ratio")
for e in range(4, 13, 2):
    n = 2**e
    r3 = lipschitz_constant(n, 3, 0.3).value / asymptotic_estimate(n, 3, 0.3)
    r2 = lipschitz_constant(n, 2, 0.3).value / asymptotic_estimate(n, 2, 0.3)
    print(f"  {n:6d}   {r3:.8f}    {r2:.8f}")

print("\nthe fixed point lambda(n, k, delta) = delta shrinks with n:")
print("      n    delta*        2*delta* (equilibrium quality)")
for n in (10, 100, 1000):
    point = delta_fixed_point(n, 3)
    print(f"  {n:5d}   {point.delta:.8f}   {2 * point.delta:.8f}")

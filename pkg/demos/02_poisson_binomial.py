"""Poisson Binomial laws: modes, shift distances, and the two-action statistics.

The distance between a Poisson Binomial variable and its unit shift is just
its peak probability, the peak sits at the mean up to rounding, and a
normal density matches the scaled pmf ever more tightly as the variance
grows.  The split-sum maximum and the binomial collision probability shown
at the end are exactly what the two-action Lipschitz constant is made of.
"""

import numpy as np

from lipgames import (
    binomial_collision_prob,
    normal_approx_error,
    pb_mode,
    pb_pmf,
    two_block_max_prob,
    unit_shift_tv,
)

probs = [0.9, 0.4, 0.35, 0.8]
pmf = pb_pmf(probs)
print("pmf of Bernoulli sums with p =", probs)
for t in range(pmf.support_min, pmf.support_max + 1):
    print(f"  {t}: {pmf.prob(t):.6f}")
print(f"mean = {sum(probs):.2f}, mode = {pb_mode(probs)}")
print(f"TV distance to the unit shift = {unit_shift_tv(probs):.6f} (the peak)")

print("\nnormal-density gap for fair-coin sums (scaled error keeps falling):")
print("    m     sigma      gap        gap*sigma")
for m in (16, 64, 256, 1024):
    gap, sigma = normal_approx_error([0.5] * m)
    print(f"  {m:5d}  {sigma:8.3f}  {gap:.3e}  {gap * sigma:.3e}")

print("\nsplit-sum maximum vs binomial collision probability (delta = 0.4):")
print("    n   split max     collision(n//2)  (equal at even n)")
for n in range(0, 11, 2):
    block = two_block_max_prob(n, 0.4)
    coll = binomial_collision_prob(n // 2, 0.4)
    print(f"  {n:3d}   {block.value:.10f}  {coll:.10f}   split={block.split} point={block.point}")

print("\nodd n sits strictly between its even neighbours:")
for n in (3, 7, 11):
    mid = two_block_max_prob(n, 0.4).value
    above = two_block_max_prob(n - 1, 0.4).value
    below = two_block_max_prob(n + 1, 0.4).value
    print(f"  n={n}: {below:.8f} <= {mid:.8f} <= {above:.8f}")

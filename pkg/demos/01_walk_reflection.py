"""Lazy walk distributions and the reflection identity.

The whole analysis rests on one walk fact: the probability that a lazy
symmetric walk sits in {0, 1} after n steps equals the probability that it
stayed strictly below 1 the entire time.  The first quantity comes from the
plain distribution recursion, the second from an absorbing-barrier
recursion; they agree to machine precision.
"""

import numpy as np

from lipgames import passage_prob, point_prob, stay_below_prob, walk_pmf

print("law of a 4-step walk at rate 0.5:")
pmf = walk_pmf(4, 0.5)
for t in range(-4, 5):
    bar = "#" * int(round(60 * pmf.prob(t)))
    print(f"  {t:+d}  {pmf.prob(t):.6f}  {bar}")

print("\nreflection identity, rate grid, n up to 40:")
print("    n   P(in {0,1})   P(stay < 1)    |diff|")
for r in (0.1, 0.5, 1.0):
    for n in (1, 5, 20, 40):
        a = passage_prob(n, r)
        b = stay_below_prob(n, r)
        print(f"  r={r:.1f} n={n:3d}  {a:.12f}  {b:.12f}  {abs(a - b):.1e}")

print("\npassage probability is non-increasing in n (rate 0.3):")
values = [passage_prob(n, 0.3) for n in range(0, 30, 5)]
print("  " + "  ".join(f"{v:.5f}" for v in values))
assert all(b <= a for a, b in zip(values, values[1:]))

print("\na full-rate walk after 2m steps is a doubled half-rate walk after m:")
for t in (-4, -2, 0, 2, 4):
    print(f"  t={t:+d}:  {point_prob(8, 1.0, t):.8f}  vs  {point_prob(4, 0.5, t // 2):.8f}")

probs = walk_pmf(31, 0.37).probs
print("\npmf symmetry is exact:", bool(np.array_equal(probs, probs[::-1])))

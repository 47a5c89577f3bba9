"""Monte Carlo mirror coupling vs the exact walk value.

Two occupancy chains start one player apart; perturbed draws on the toggled
action pair are mirrored in the second chain until the chains meet.  The
fraction of runs that never meet estimates the walk passage probability,
the per-draw marginals stay honest, and the gap process moves exactly like
the lazy walk it is supposed to be.
"""

import numpy as np

from lipgames import (
    mirrored_action_counts,
    passage_prob,
    perturbed_action_law,
    simulate_coupling,
    simulate_meet_time,
)

SAMPLES = 200_000
SEED = 20260810

print("never-met fraction vs exact passage probability:")
for n, k, delta in ((20, 3, 0.3), (50, 4, 0.5), (10, 2, 0.2)):
    est = simulate_coupling(n, k, delta, SAMPLES, SEED)
    exact = passage_prob(n, 2 * delta / k)
    z = (est.estimate - exact) / est.std_error
    print(
        f"  n={n:2d} k={k} delta={delta}: estimate {est.estimate:.5f} "
        f"exact {exact:.5f}  z = {z:+.2f}"
    )

print("\ngap-process transition frequencies (n=30, k=3, delta=0.3):")
res = simulate_meet_time(30, 3, 0.3, SAMPLES, SEED)
freq = res.transitions / res.transitions.sum()
rate = 0.3 / 3
for name, f, p in zip(("down", "stay", "up  "), freq, (rate, 1 - 2 * rate, rate)):
    print(f"  {name}: observed {f:.5f}  expected {p:.5f}")

print("\nfirst-meeting histogram (first 10 steps):")
for step in range(1, 11):
    bar = "#" * int(round(3000 * res.counts[step] / res.samples))
    print(f"  step {step:2d}: {int(res.counts[step]):6d} {bar}")
print(f"  never : {int(res.counts[-1]):6d}")

print("\nmirrored players keep the correct marginals (n=4, k=3, delta=0.3):")
counts = mirrored_action_counts(4, 3, 0.3, SAMPLES, SEED)
law = perturbed_action_law(2, 3, 0.3)
print("  expected:", np.array2string(law, precision=4))
for i, row in enumerate(counts):
    print(f"  player {i}:", np.array2string(row / SAMPLES, precision=4))

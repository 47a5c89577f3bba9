"""Brute force against closed form.

The oracle never sees the walk or the split-sum machinery: it enumerates
every count class of opponent profiles, convolves the perturbed action laws
exactly, and takes the worst total variation distance between the two
one-player shifts.  The closed forms match it to machine precision, and the
worst class is always everyone piled on one spare action.
"""

from lipgames import lipschitz_constant, lipschitz_oracle

print("formula vs oracle (every value should agree to ~1e-15):")
print("   n  k  delta   formula           oracle            |diff|")
worst = 0.0
for k in (2, 3, 4):
    for n in (3, 5, 8):
        for delta in (0.25, 0.5, 0.75):
            formula = lipschitz_constant(n, k, delta).value
            oracle = lipschitz_oracle(n, k, delta).value
            diff = abs(formula - oracle)
            worst = max(worst, diff)
            print(f"  {n:2d}  {k}  {delta:.2f}   {formula:.12f}    {oracle:.12f}    {diff:.1e}")
print(f"max deviation: {worst:.2e}")

print("\nthe maximising count class piles everyone on a spare action:")
for n, k in ((6, 3), (7, 4)):
    value, witness = lipschitz_oracle(n, k, 0.4)
    print(f"  n={n}, k={k}: worst class {witness} (actions 0 and 1 are the toggled pair)")

"""
F1 and the unachievable region
==============================

Two points on the same F1 contour can mean very different things once the
floor is taken into account.
"""

import numpy as np

import prspace as ps

pi = 0.33
for r, p in ((0.9, 0.3), (0.3, 0.9)):
    print(
        f"(r={r}, p={p})  F1 {ps.f_beta(r, p):.3f}  achievable {ps.is_achievable((r, p), pi)}"
        f"  modified F1 {ps.modified_f1(r, p, pi):.3f}"
    )

# %%
# The modified score is zero along the whole minimum curve, and nondecreasing
# in each argument, but it cannot be strictly increasing: every point at or
# below random-guess precision ties at zero.
r = np.linspace(0, 1, 11)
print([ps.modified_f1(x, float(ps.min_precision(x, pi)), pi) for x in r])
print(ps.modified_f1(0, pi, pi), ps.modified_f1(1, pi, pi))

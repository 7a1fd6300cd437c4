"""
The unachievable region of PR space
===================================

A dataset with a fraction ``pi`` of positives cannot produce a PR curve below
``pi * r / (1 - pi + pi * r)``. The worst possible ranking traces that
boundary exactly.
"""

import numpy as np

import prspace as ps

# %%
# Precision floor for one skew. With one positive for every two negatives,
# recall 0.6 cannot come with precision below about 0.23.
pi = 1 / 3
for r in (0.2, 0.6, 1.0):
    print(f"r={r:.1f}  minimum precision {ps.min_precision(r, pi):.4f}")
print("(0.6, 0.2) achievable:", ps.is_achievable((0.6, 0.2), pi))

# %%
# The worst ranking (every negative above every positive) sits on the floor,
# so its area equals the closed-form minimum.
worst = ps.ScoredDataset([0] * 200 + [1] * 100, np.arange(300, 0, -1.0))
curve = ps.pr_curve(worst)
print(f"worst-ranking AUCPR {ps.aucpr(curve).value:.6f}")
print(f"AUCPR_MIN           {ps.aucpr_min(pi):.6f}")
print(f"AP of worst ranking {ps.average_precision(worst):.6f}, AP_MIN {ps.ap_min(100, 200):.6f}")

# %%
# The floor grows with the skew, and most of it lies at high recall.
for skew in (0.01, 0.1, 0.5, 0.9):
    full = ps.aucpr_min(skew)
    upper = ps.aucpr_min_range(skew, (0.5, 1))
    print(f"pi={skew:<4}  AUCPR_MIN {full:.4f}  share above r=0.5 {upper / full:.2f}")

# %%
# A family of minimum curves, and the worst curve on its own floor.
ps.io.write_text("minimum_curves.svg", ps.plot.render_svg(ps.plot.PlotSpec(skews=[0.05, 0.2, 1 / 3, 0.5, 0.8])))
ps.io.write_text("worst_ranking.svg", ps.plot.render_svg(ps.plot.PlotSpec(curves=[("worst", curve)])))

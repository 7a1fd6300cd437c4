"""
Downsampling negatives
======================

Removing negatives raises the skew and with it the AUCPR floor. AUCPR moves
with the ratio; AUCNPR moves less.
"""

import numpy as np

import prspace as ps

data = ps.calibrated_scorer_dataset(pos=200, neg=4800, separation=1.5, seed=0)
ratios = [ps.Ratio(1, k) for k in (1, 2, 3, 4, 5, 10, 24)]
rows = ps.ratio_sweep(data, ratios, seeds=range(20))

# %%
# Mean over seeds per ratio, next to the scores at the original skew.
print(f"{'ratio':>5} {'AUCPR':>7} {'AUCNPR':>7} {'orig AUCPR':>11} {'orig AUCNPR':>12}")
for ratio in ratios:
    cell = [r for r in rows if r.ratio == ratio]
    print(
        f"{str(ratio):>5} {np.mean([r.down_aucpr for r in cell]):7.3f} {np.mean([r.down_aucnpr for r in cell]):7.3f}"
        f" {cell[0].orig_aucpr:11.3f} {cell[0].orig_aucnpr:12.3f}"
    )

# %%
# Spread of each column across the whole sweep.
print(ps.sweep_spread(rows))

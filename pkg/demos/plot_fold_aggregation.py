"""
Aggregating cross-validation folds
==================================

Fold means, the merged-data score, and a vertically averaged curve drawn with
the minimum curves of every fold.
"""

import numpy as np

import prspace as ps

rng = np.random.default_rng(1)

# %%
# Five folds with uneven class balance.
labels, scores, folds = [], [], []
for k, pos in enumerate((20, 35, 15, 60, 25)):
    y = np.r_[np.ones(pos), np.zeros(300 - pos)]
    labels.append(y)
    scores.append(1 / (1 + np.exp(-rng.normal(1.2 * y, 1.0))))
    folds += [k] * 300
data = ps.ScoredDataset(np.concatenate(labels), np.concatenate(scores), folds=folds)

# %%
# Mean of per-fold scores against the merged dataset. The merged score treats
# scores from different folds as comparable, which assumes calibration.
agg = ps.aggregate(data, grid_step=0.01)
print(f"mean AUCPR {agg.mean_aucpr:.4f}   merged AUCPR {agg.merged.aucpr:.4f}")
print(f"mean AUCNPR {agg.mean_aucnpr:.4f}  merged AUCNPR {agg.merged.aucnpr:.4f}")
print(f"fold skews {agg.skew_min:.3f}..{agg.skew_max:.3f}  warning: {agg.skew_warning}")

# %%
# The averaged curve mixes folds with different floors; the band spans them.
va = agg.vertical_average
lo, hi = va.min_precision_band
i = int(np.searchsorted(va.recall, 0.8))
print(f"at r=0.8: averaged precision {va.precision[i]:.3f}, fold floors {lo[i]:.3f}..{hi[i]:.3f}")

curves = [(f"fold {k}", ps.pr_curve(g)) for k, g in data.groups("fold").items()]
ps.io.write_text("folds.svg", ps.plot.render_svg(ps.plot.PlotSpec(curves=curves, title="Per-fold PR curves")))

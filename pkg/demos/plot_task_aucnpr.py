"""
Comparing tasks with normalized AUCPR
=====================================

Raw AUCPR rewards an easy floor: a task with many positives scores well even
for a poor ranking. AUCNPR rescales each task's area to ``[0, 1]`` between its
own minimum and maximum.
"""

import numpy as np

import prspace as ps

rng = np.random.default_rng(0)

# %%
# Three tasks scored by the same kind of model, at different skews.
labels, scores, tasks = [], [], []
for name, pos, neg in (("common", 500, 500), ("rare", 50, 950), ("very rare", 10, 990)):
    y = np.r_[np.ones(pos), np.zeros(neg)]
    labels.append(y)
    scores.append(rng.normal(y, 1.0))
    tasks += [name] * (pos + neg)
data = ps.ScoredDataset(np.concatenate(labels), np.concatenate(scores), tasks=tasks)

# %%
# Each task is scored against its own floor.
agg = ps.aggregate(data, group_by="task")
print(f"{'task':<10} {'pi':>6} {'AUCPR':>7} {'MIN':>7} {'AUCNPR':>7}")
for r in agg.reports:
    print(f"{r.group:<10} {r.skew:6.3f} {r.aucpr:7.3f} {r.aucpr_min:7.3f} {r.aucnpr:7.3f}")
print(f"{'mean':<10} {'':>6} {agg.mean_aucpr:7.3f} {'':>7} {agg.mean_aucnpr:7.3f}")
print("skews differ by more than 0.05:", agg.skew_warning)

# %%
# The rejected alternative: rescaling so random guessing is 0. The worst
# ranking then scores below zero, by an amount that depends on the skew.
for skew in (0.5, 0.05, 0.01):
    print(f"pi={skew:<4}  worst ranking -> {ps.random_normalized_aucpr(ps.aucpr_min(skew), skew):+.3f}")

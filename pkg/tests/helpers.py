"""Dataset builders and brute-force oracles shared by the tests."""

import numpy as np

from prspace import ScoredDataset


def worst_ranking(pos, neg, **groups):
    """Every negative scored above every positive."""
    labels = [0] * neg + [1] * pos
    scores = np.arange(pos + neg, 0, -1, dtype=float)
    return ScoredDataset(labels, scores, **groups)


def perfect_ranking(pos, neg, **groups):
    labels = [1] * pos + [0] * neg
    scores = np.arange(pos + neg, 0, -1, dtype=float)
    return ScoredDataset(labels, scores, **groups)


def random_dataset(rng, pos, neg, n_levels=None):
    """Random scores; ``n_levels`` forces ties by quantizing."""
    labels = np.array([1] * pos + [0] * neg)
    scores = rng.random(pos + neg)
    if n_levels:
        scores = np.floor(scores * n_levels) / n_levels
    perm = rng.permutation(pos + neg)
    return ScoredDataset(labels[perm], scores[perm])


def brute_force_ap(labels_in_rank_order):
    """Average precision by walking a fully ordered ranking."""
    tp = fp = 0
    precisions = []
    for y in labels_in_rank_order:
        if y:
            tp += 1
            precisions.append(tp / (tp + fp))
        else:
            fp += 1
    return sum(precisions) / len(precisions)

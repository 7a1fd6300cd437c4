"""Seeded negative downsampling and ratio sweeps.

Random draws use NumPy's PCG64 generator seeded from ``(seed, pos_part,
neg_part)`` through :class:`numpy.random.SeedSequence`, so each sweep cell is
reproducible on its own regardless of evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .aggregate import MetricsReport, metrics_report
from .bounds import RecallRange
from .core import ScoredDataset
from .errors import DomainError, InsufficientNegatives

__all__ = [
    "Ratio",
    "SweepRow",
    "downsample_negatives",
    "ratio_sweep",
    "calibrated_scorer_dataset",
    "sweep_spread",
]


@dataclass(frozen=True, order=True)
class Ratio:
    """Target ``positives : negatives`` ratio, e.g. ``Ratio(1, 5)``."""

    pos_part: int
    neg_part: int

    def __post_init__(self):
        for name in ("pos_part", "neg_part"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v < 1:
                raise DomainError(f"ratio {name} must be a positive integer, got {v!r}")

    @classmethod
    def parse(cls, text: str) -> "Ratio":
        try:
            p, n = text.split(":")
            return cls(int(p), int(n))
        except ValueError:
            raise DomainError(f"expected a ratio like '1:5', got {text!r}") from None

    @property
    def skew(self) -> float:
        return self.pos_part / (self.pos_part + self.neg_part)

    def negatives_for(self, pos: int) -> int:
        """Number of negatives matching ``pos`` positives, rounded half up."""
        return (2 * pos * self.neg_part + self.pos_part) // (2 * self.pos_part)

    def __str__(self) -> str:
        return f"{self.pos_part}:{self.neg_part}"


def _generator(seed: int, ratio: Ratio) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), ratio.pos_part, ratio.neg_part])))


def downsample_negatives(data: ScoredDataset, ratio: Ratio, seed: int) -> ScoredDataset:
    """Keep every positive and a uniform sample of negatives hitting ``ratio``.

    Retained records keep their original order. When the target equals the
    available number of negatives the dataset is returned unchanged.

    Raises
    ------
    InsufficientNegatives
        If the data has fewer negatives than the ratio requires.
    """
    if isinstance(ratio, str):
        ratio = Ratio.parse(ratio)
    bal = data.require_both_classes()
    want = ratio.negatives_for(bal.pos)
    if want > bal.neg:
        raise InsufficientNegatives(
            f"ratio {ratio} needs {want} negatives for {bal.pos} positives, only {bal.neg} available"
        )
    if want < 1:
        raise InsufficientNegatives(f"ratio {ratio} leaves no negatives for {bal.pos} positives")
    neg_idx = np.flatnonzero(data.labels == 0)
    chosen = _generator(seed, ratio).choice(neg_idx, size=want, replace=False)
    keep = np.zeros(len(data), dtype=bool)
    keep[data.labels == 1] = True
    keep[chosen] = True
    return data.take(keep)


@dataclass(frozen=True)
class SweepRow:
    ratio: Ratio
    seed: int
    downsampled: MetricsReport
    original: MetricsReport

    @property
    def down_aucpr(self) -> float:
        return self.downsampled.aucpr

    @property
    def down_aucnpr(self) -> float:
        return self.downsampled.aucnpr

    @property
    def orig_aucpr(self) -> float:
        return self.original.aucpr

    @property
    def orig_aucnpr(self) -> float:
        return self.original.aucnpr


def ratio_sweep(
    data: ScoredDataset,
    ratios: Iterable[Ratio],
    seeds: Sequence[int],
    recall_range=None,
) -> list[SweepRow]:
    """Score the data at each ``(ratio, seed)`` and at its original skew.

    Rows are ordered by ratio as given, then by seed.
    """
    rr = RecallRange.coerce(recall_range)
    original = metrics_report(data, rr, group="original")
    rows = []
    for ratio in ratios:
        if isinstance(ratio, str):
            ratio = Ratio.parse(ratio)
        for seed in seeds:
            try:
                sub = downsample_negatives(data, ratio, seed)
            except InsufficientNegatives as exc:
                raise InsufficientNegatives(f"ratio {ratio}, seed {seed}: {exc}") from exc
            rows.append(SweepRow(ratio, int(seed), metrics_report(sub, rr, group=str(ratio)), original))
    return rows


def sweep_spread(rows: Sequence[SweepRow]) -> dict[str, float]:
    """Sample standard deviations of the downsampled AUCPR and AUCNPR columns."""
    if len(rows) < 2:
        raise DomainError("need at least two sweep rows for a standard deviation")
    return {
        "aucpr_std": float(np.std([r.down_aucpr for r in rows], ddof=1)),
        "aucnpr_std": float(np.std([r.down_aucnpr for r in rows], ddof=1)),
    }


def calibrated_scorer_dataset(pos: int = 200, neg: int = 4800, separation: float = 1.5, seed: int = 0) -> ScoredDataset:
    """Synthetic dataset scored by a calibrated model.

    Features are drawn from unit-variance normals with means 0 (negatives) and
    ``separation`` (positives); each score is the exact posterior probability
    of the positive class under that generative model and the dataset's own
    class balance.
    """
    if pos < 1 or neg < 1:
        raise DomainError("need at least one example of each class")
    rng = np.random.Generator(np.random.PCG64(seed))
    labels = np.concatenate([np.ones(pos, dtype=np.int8), np.zeros(neg, dtype=np.int8)])
    x = rng.standard_normal(pos + neg) + separation * labels
    log_odds = np.log(pos / neg) + separation * x - separation**2 / 2
    scores = 1.0 / (1.0 + np.exp(-log_odds))
    order = rng.permutation(pos + neg)
    return ScoredDataset(labels[order], scores[order])

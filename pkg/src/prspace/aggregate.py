"""Per-fold and per-task metrics, their means, and merged-data metrics.

Each group is scored against its own skew, so a group's AUCNPR is zero exactly
when its AUCPR sits on that group's unachievable floor. Means are unweighted by
default; ``skew_spread`` flags aggregates that mix very different floors.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, replace
from typing import Hashable, Sequence

import numpy as np

from .bounds import RecallRange, ap_min, aucpr_min_range
from .core import ScoredDataset, cutpoints
from .curves import PRCurve, aucpr, average_precision, pr_curve, vertical_average
from .errors import DegenerateDataset, DegenerateGroup, DomainError, EmptyInput
from .scores import aucnpr, f_beta, modified_f1

__all__ = [
    "MetricsReport",
    "AggregateReport",
    "metrics_report",
    "group_metrics",
    "mean_scores",
    "merged_metrics",
    "aggregate",
]

SKEW_SPREAD_THRESHOLD = 0.05
_TOL = 1e-9


@dataclass(frozen=True)
class MetricsReport:
    """Scores for one evaluation (a fold, a task, or merged data).

    ``f_beta`` and ``modified_f1`` describe a single operating point, given by
    ``threshold`` (examples scoring at or above it are labeled positive).
    """

    pos: int
    neg: int
    skew: float
    aucpr: float
    aucpr_min: float
    aucpr_max: float
    aucnpr: float
    ap: float
    ap_min: float
    range: tuple[float, float] = (0.0, 1.0)
    group: Hashable | None = None
    beta: float | None = None
    threshold: float | None = None
    op_recall: float | None = None
    op_precision: float | None = None
    f_beta: float | None = None
    modified_f1: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "range", tuple(float(x) for x in self.range))
        if not (self.aucpr_min - _TOL <= self.aucpr <= self.aucpr_max + _TOL):
            raise DomainError(
                f"aucpr {self.aucpr} outside [{self.aucpr_min}, {self.aucpr_max}] for group {self.group!r}"
            )
        if not (-_TOL <= self.aucnpr <= 1 + _TOL):
            raise DomainError(f"aucnpr {self.aucnpr} outside [0, 1] for group {self.group!r}")
        if self.ap < self.ap_min - _TOL:
            raise DomainError(f"ap {self.ap} below its minimum {self.ap_min} for group {self.group!r}")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["range"] = list(self.range)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "MetricsReport":
        d = dict(d)
        d["range"] = tuple(d.get("range", (0.0, 1.0)))
        return cls(**d)


@dataclass(frozen=True)
class AggregateReport:
    reports: tuple[MetricsReport, ...]
    mean_aucpr: float
    mean_aucnpr: float
    mean_ap: float
    skew_min: float
    skew_max: float
    skew_spread_threshold: float = SKEW_SPREAD_THRESHOLD
    weighted: bool = False
    merged: MetricsReport | None = None
    group_by: str | None = None
    vertical_average: object | None = field(default=None, compare=False)

    @property
    def skew_spread(self) -> float:
        return self.skew_max - self.skew_min

    @property
    def skew_warning(self) -> bool:
        """True when the groups' skews differ by more than the threshold."""
        return self.skew_spread > self.skew_spread_threshold


def _operating_point(curve: PRCurve, data: ScoredDataset, beta: float, threshold):
    """Recall, precision and threshold of the chosen operating point.

    With ``threshold=None`` the cutpoint maximizing F-beta is used.
    """
    pos = curve.balance.pos
    if threshold is not None:
        pred = data.scores >= threshold
        tp = int(np.sum(pred & (data.labels == 1)))
        fp = int(np.sum(pred & (data.labels == 0)))
        r = tp / pos
        p = tp / (tp + fp) if tp + fp else 0.0
        return float(threshold), r, p
    tp = curve.cutpoints.tp[1:].astype(float)
    fp = curve.cutpoints.fp[1:].astype(float)
    r, p = tp / pos, tp / (tp + fp)
    b2 = beta * beta
    with np.errstate(invalid="ignore", divide="ignore"):
        f = np.where(tp > 0, (1 + b2) * p * r / (b2 * p + r), 0.0)
    i = int(np.argmax(f))
    # the i-th tie group's score is the threshold reaching that cutpoint
    distinct = np.unique(data.scores)[::-1]
    return float(distinct[i]), float(r[i]), float(p[i])


def metrics_report(
    data: ScoredDataset,
    recall_range=None,
    group=None,
    beta: float = 1.0,
    threshold: float | None = None,
) -> MetricsReport:
    """Score one dataset against its own skew."""
    rr = RecallRange.coerce(recall_range)
    curve = PRCurve(cutpoints(data))
    bal = curve.balance
    area = aucpr(curve, rr).value
    lo = aucpr_min_range(bal.skew, rr)
    thr, r, p = _operating_point(curve, data, beta, threshold)
    fb = f_beta(r, p, beta) if (r or p) else 0.0
    return MetricsReport(
        pos=bal.pos,
        neg=bal.neg,
        skew=bal.skew,
        aucpr=area,
        aucpr_min=lo,
        aucpr_max=rr.width,
        aucnpr=aucnpr(area, bal.skew, rr),
        ap=average_precision(curve.cutpoints),
        ap_min=ap_min(bal.pos, bal.neg),
        range=(rr.lo, rr.hi),
        group=group,
        beta=beta,
        threshold=thr,
        op_recall=r,
        op_precision=p,
        f_beta=fb,
        modified_f1=modified_f1(r, p, bal.skew),
    )


def group_metrics(data: ScoredDataset, group_by: str = "fold", recall_range=None, **kwargs) -> list[MetricsReport]:
    """One report per fold or task, sorted by group id.

    Raises
    ------
    DegenerateGroup
        If a group lacks positives or negatives.
    """
    out = []
    for key, sub in data.groups(group_by).items():
        try:
            out.append(metrics_report(sub, recall_range, group=key, **kwargs))
        except DegenerateDataset as exc:
            raise DegenerateGroup(key, f"{group_by} {key!r}: {exc}") from exc
    return out


def _mean(values: Sequence[float], weights=None) -> float:
    if weights is None:
        return math.fsum(values) / len(values)
    total = math.fsum(weights)
    return math.fsum(v * w for v, w in zip(values, weights)) / total


def mean_scores(
    reports: Sequence[MetricsReport],
    skew_spread_threshold: float = SKEW_SPREAD_THRESHOLD,
    weighted: bool = False,
) -> AggregateReport:
    """Average AUCPR, AUCNPR and AP over groups.

    With ``weighted=True`` each group counts in proportion to its size.
    """
    reports = tuple(reports)
    if not reports:
        raise EmptyInput("mean_scores needs at least one report")
    w = [r.pos + r.neg for r in reports] if weighted else None
    skews = [r.skew for r in reports]
    return AggregateReport(
        reports=reports,
        mean_aucpr=_mean([r.aucpr for r in reports], w),
        mean_aucnpr=_mean([r.aucnpr for r in reports], w),
        mean_ap=_mean([r.ap for r in reports], w),
        skew_min=min(skews),
        skew_max=max(skews),
        skew_spread_threshold=skew_spread_threshold,
        weighted=weighted,
    )


def merged_metrics(data: ScoredDataset, recall_range=None, **kwargs) -> MetricsReport:
    """Score the pooled records of every group as one dataset.

    Scores from different groups are compared directly, which is only
    meaningful when they are calibrated; no rescaling is done here.
    """
    return metrics_report(data, recall_range, group="merged", **kwargs)


def aggregate(
    data: ScoredDataset,
    group_by: str = "fold",
    recall_range=None,
    skew_spread_threshold: float = SKEW_SPREAD_THRESHOLD,
    weighted: bool = False,
    grid_step: float | None = None,
    **kwargs,
) -> AggregateReport:
    """Per-group reports, their means and the merged report in one call.

    If ``grid_step`` is given the groups' curves are also vertically averaged.
    """
    reports = group_metrics(data, group_by, recall_range, **kwargs)
    agg = mean_scores(reports, skew_spread_threshold, weighted)
    va = None
    if grid_step is not None:
        va = vertical_average([pr_curve(g) for g in data.groups(group_by).values()], grid_step)
    return replace(
        agg,
        merged=merged_metrics(data, recall_range, **kwargs),
        group_by=group_by,
        vertical_average=va,
    )

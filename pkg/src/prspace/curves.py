"""PR curves with count-space interpolation, exact areas and average precision.

Interpolation between two cutpoints is linear in ``(tp, fp)`` (equivalently,
linear in ROC space). Along a segment from ``(tp_a, fp_a)`` to ``(tp_b, fp_b)``
with slope ``s = (fp_b - fp_a) / (tp_b - tp_a)`` precision is

    tp / ((1 + s) * tp + c),    c = fp_a - s * tp_a

which is not linear in recall, so areas are integrated with the closed-form
antiderivative rather than the trapezoid rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bounds import RecallRange, _one_minus_log1p_ratio, min_precision, recall_grid
from .core import ClassBalance, Cutpoints, ScoredDataset, cutpoints
from .errors import DomainError, EmptyInput

__all__ = [
    "PRCurve",
    "AreaResult",
    "VerticalAverage",
    "pr_curve",
    "aucpr",
    "average_precision",
    "vertical_average",
]


@dataclass(frozen=True, eq=False)
class PRCurve:
    """A PR curve: ranking cutpoints plus count-space interpolation."""

    cutpoints: Cutpoints

    @property
    def balance(self) -> ClassBalance:
        return self.cutpoints.balance

    @property
    def skew(self) -> float:
        return self.balance.skew

    def segments(self):
        """``(tp_a, fp_a, tp_b, fp_b)`` arrays for segments of positive recall width."""
        tp, fp = self.cutpoints.tp, self.cutpoints.fp
        keep = np.flatnonzero(np.diff(tp) > 0)
        return tp[keep], fp[keep], tp[keep + 1], fp[keep + 1]

    @property
    def recall(self) -> np.ndarray:
        """Recall at each cutpoint."""
        return self.cutpoints.tp / self.balance.pos

    @property
    def precision(self) -> np.ndarray:
        """Precision at each cutpoint; ``nan`` at the origin."""
        tp = self.cutpoints.tp.astype(float)
        with np.errstate(invalid="ignore"):
            return tp / (tp + self.cutpoints.fp)

    def precision_at(self, recall):
        """Interpolated precision at ``recall``.

        Where the curve drops vertically (several cutpoints share a recall) the
        highest precision, i.e. the one reached first, is returned. At recall 0
        the right-hand limit of the first segment is used.
        """
        r = np.asarray(recall, dtype=float)
        if np.any(~np.isfinite(r)) or np.any(r < 0) or np.any(r > 1):
            raise DomainError("recall must lie in [0, 1]")
        pos = self.balance.pos
        tp = r * pos
        snapped = np.rint(tp)
        tp = np.where(np.abs(tp - snapped) <= 1e-9 * pos, snapped, tp)
        ta, fa, tb, fb = self.segments()
        idx = np.clip(np.searchsorted(tb, tp, side="left"), 0, ta.size - 1)
        s = (fb[idx] - fa[idx]) / (tb[idx] - ta[idx])
        fp = fa[idx] + s * (tp - ta[idx])
        with np.errstate(invalid="ignore", divide="ignore"):
            p = np.where(tp > 0, tp / (tp + fp), np.where(fa[idx] > 0, 0.0, 1.0 / (1.0 + s)))
        return float(p) if p.ndim == 0 else p

    def interpolated(self, points_per_segment: int = 32):
        """Dense ``(recall, precision)`` polyline following the interpolation,
        including vertical drops. The origin uses the right-hand limit."""
        tp, fp = self.cutpoints.tp, self.cutpoints.fp
        pos = self.balance.pos
        rs, ps = [], []
        for i in range(tp.size - 1):
            ta, fa, tb, fb = tp[i], fp[i], tp[i + 1], fp[i + 1]
            if tb == ta:
                if ta > 0:
                    rs += [ta / pos, tb / pos]
                    ps += [ta / (ta + fa), tb / (tb + fb)]
                continue
            t = np.linspace(ta, tb, points_per_segment + 1)
            s = (fb - fa) / (tb - ta)
            f = fa + s * (t - ta)
            with np.errstate(invalid="ignore"):
                p = t / (t + f)
            if ta == 0:
                p[0] = 0.0 if fa > 0 else 1.0 / (1.0 + s)
            rs.extend((t / pos).tolist())
            ps.extend(p.tolist())
        return np.asarray(rs), np.asarray(ps)


@dataclass(frozen=True)
class AreaResult:
    value: float
    range: RecallRange
    method: str = "exact"
    step: float | None = None

    def __float__(self) -> float:
        return self.value


def pr_curve(data: ScoredDataset) -> PRCurve:
    """Build the interpolated PR curve for a scored dataset.

    >>> ds = ScoredDataset.from_records([(0, 0.9), (0, 0.8), (1, 0.2), (1, 0.1)])
    >>> curve = pr_curve(ds)
    >>> curve.precision_at(1.0)
    0.5
    """
    return PRCurve(cutpoints(data))


def _exact_area(curve: PRCurve, rr: RecallRange) -> float:
    pos = curve.balance.pos
    ta, fa, tb, fb = (a.astype(float) for a in curve.segments())
    t0 = np.maximum(ta, rr.lo * pos)
    t1 = np.minimum(tb, rr.hi * pos)
    live = t1 > t0
    ta, fa, tb, fb, t0, t1 = (a[live] for a in (ta, fa, tb, fb, t0, t1))
    s = (fb - fa) / (tb - ta)
    k = 1.0 + s
    # denominator tp + fp at the clipped segment start
    d = t0 + fa + s * (t0 - ta)
    width = t1 - t0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        u = np.where(d > 0, k * width / d, np.inf)
        # u overflows when d is subnormal; the log difference stays finite
        log_term = np.where(np.isfinite(u), np.log1p(u), np.log(d + k * width) - np.log(d))
        part = width / k * _one_minus_log1p_ratio(u) + np.where(t0 > 0, t0 / k * log_term, 0.0)
    return float(np.sum(part)) / pos


def _numeric_area(curve: PRCurve, rr: RecallRange, step: float) -> float:
    # composite trapezoid on each smooth piece, so vertical drops are exact
    pos = curve.balance.pos
    total = 0.0
    for ta, fa, tb, fb in zip(*curve.segments()):
        r0, r1 = max(ta / pos, rr.lo), min(tb / pos, rr.hi)
        if r1 <= r0:
            continue
        n = max(1, int(np.ceil((r1 - r0) / step)))
        t = np.linspace(r0, r1, n + 1) * pos
        s = (fb - fa) / (tb - ta)
        f = fa + s * (t - ta)
        with np.errstate(invalid="ignore"):
            p = t / (t + f)
        if t[0] == 0:
            p[0] = 0.0 if fa > 0 else 1.0 / (1.0 + s)
        total += float(np.sum((p[1:] + p[:-1]) * np.diff(t))) / (2 * pos)
    return float(total)


def aucpr(curve: PRCurve, recall_range=None, method: str = "exact", step: float = 1e-4) -> AreaResult:
    """Area under the interpolated PR curve over ``recall_range``.

    Parameters
    ----------
    curve : PRCurve
    recall_range : RecallRange, tuple or "a:b", optional
        Defaults to the full range ``[0, 1]``.
    method : {"exact", "numeric"}
        ``"exact"`` integrates each segment with its antiderivative;
        ``"numeric"`` uses the trapezoid rule with spacing ``step`` on each
        segment.
    """
    rr = RecallRange.coerce(recall_range)
    if method == "exact":
        return AreaResult(_exact_area(curve, rr), rr, "exact")
    if method == "numeric":
        if not step > 0:
            raise DomainError("step must be positive")
        return AreaResult(_numeric_area(curve, rr, step), rr, "numeric", step)
    raise ValueError(f"unknown method {method!r}")


def average_precision(data, optimistic: bool = False) -> float:
    """Mean precision measured at the rank of each positive.

    Tied scores form one group. By default every negative in a group is
    ranked ahead of its positives; ``optimistic=True`` ranks positives first.

    >>> ds = ScoredDataset.from_records([(1, 0.9), (0, 0.8), (1, 0.7)])
    >>> round(average_precision(ds), 4)
    0.8333
    """
    cp = data if isinstance(data, Cutpoints) else cutpoints(data)
    gp = np.diff(cp.tp)
    fp_before = cp.fp[:-1] if optimistic else cp.fp[1:]
    fp_at = np.repeat(fp_before, gp).astype(float)
    i = np.arange(1, cp.balance.pos + 1, dtype=float)
    return float(np.mean(i / (i + fp_at)))


@dataclass(frozen=True, eq=False)
class VerticalAverage:
    """Fold curves sampled on a shared recall grid.

    ``fold_precision`` and ``fold_min_precision`` have one row per input
    curve; the latter is each fold's own unachievable boundary, so spread in
    those rows shows how much the floors differ across folds.
    """

    recall: np.ndarray
    precision: np.ndarray
    fold_precision: np.ndarray
    fold_min_precision: np.ndarray
    skews: tuple[float, ...]
    grid_step: float

    @property
    def min_precision_band(self) -> tuple[np.ndarray, np.ndarray]:
        return self.fold_min_precision.min(axis=0), self.fold_min_precision.max(axis=0)


def vertical_average(curves: Sequence[PRCurve], grid_step: float = 0.01) -> VerticalAverage:
    """Unweighted mean of interpolated precision at each grid recall."""
    curves = list(curves)
    if not curves:
        raise EmptyInput("vertical averaging needs at least one curve")
    if not (0.0 < grid_step <= 0.1):
        raise DomainError(f"grid_step must lie in (0, 0.1], got {grid_step}")
    grid = recall_grid(grid_step)
    folds = np.vstack([c.precision_at(grid) for c in curves])
    mins = np.vstack([min_precision(grid, c.skew) for c in curves])
    return VerticalAverage(
        recall=grid,
        precision=folds.mean(axis=0),
        fold_precision=folds,
        fold_min_precision=mins,
        skews=tuple(c.skew for c in curves),
        grid_step=grid_step,
    )

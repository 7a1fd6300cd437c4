"""Closed forms for the unachievable region of precision-recall space.

For a dataset whose proportion of positives is ``skew``, every confusion matrix
satisfies

    precision >= skew * recall / (1 - skew + skew * recall)

with equality exactly when every negative is labeled positive. The curve traced
by the equality case is the minimum PR curve, and the area beneath it is a
floor on AUCPR that any ranking obtains for free.

All area computations route through :func:`_area_under_boundary`, which is a
rearrangement of the log-form antiderivative free of cancellation for small
skews.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ClassBalance, PRPoint, as_skew
from .errors import DomainError, InvalidRange, NoPositives

__all__ = [
    "RecallRange",
    "FULL_RANGE",
    "MinCurve",
    "min_precision",
    "is_achievable",
    "minimum_pr_curve",
    "aucpr_min",
    "aucpr_min_range",
    "ap_min",
]

# relative slack when comparing a precision against the boundary
ACHIEVABLE_RTOL = 1e-12


@dataclass(frozen=True)
class RecallRange:
    """Closed recall interval ``[lo, hi]`` with ``0 <= lo < hi <= 1``."""

    lo: float = 0.0
    hi: float = 1.0

    def __post_init__(self):
        try:
            lo, hi = float(self.lo), float(self.hi)
        except (TypeError, ValueError):
            raise InvalidRange(f"recall range bounds must be numbers, got {self.lo!r}, {self.hi!r}") from None
        if not (0.0 <= lo < hi <= 1.0):
            raise InvalidRange(f"recall range must satisfy 0 <= a < b <= 1, got [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def parse(cls, text: str) -> "RecallRange":
        """Parse ``"a:b"``."""
        parts = text.split(":")
        if len(parts) != 2:
            raise InvalidRange(f"expected a recall range like '0.5:1', got {text!r}")
        try:
            lo, hi = float(parts[0]), float(parts[1])
        except ValueError:
            raise InvalidRange(f"expected a recall range like '0.5:1', got {text!r}") from None
        return cls(lo, hi)

    @classmethod
    def coerce(cls, value) -> "RecallRange":
        if value is None:
            return FULL_RANGE
        if isinstance(value, RecallRange):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        lo, hi = value
        return cls(lo, hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def is_full(self) -> bool:
        return self.lo == 0.0 and self.hi == 1.0

    def __iter__(self):
        yield self.lo
        yield self.hi


FULL_RANGE = RecallRange(0.0, 1.0)


def _one_minus_log1p_ratio(u):
    """``1 - log1p(u) / u`` for ``u >= 0``, accurate near zero; ``inf`` maps to 1."""
    u = np.asarray(u, dtype=float)
    out = np.ones_like(u)
    small = u < 0.1
    if np.any(small):
        us = u[small]
        # Horner form of sum_{k>=1} (-1)^(k+1) u^k / (k+1); 24 terms reach 1e-25 at u=0.1
        acc = np.zeros_like(us)
        for k in range(24, 0, -1):
            acc = us * ((-1.0) ** (k + 1) / (k + 1) + acc)
        out[small] = acc
    big = ~small & np.isfinite(u)
    out[big] = 1.0 - np.log1p(u[big]) / u[big]
    return float(out) if out.ndim == 0 else out


def _area_under_boundary(skew: float, lo: float, hi: float) -> float:
    """Integral of the minimum-precision boundary over recall in ``[lo, hi]``.

    With ``d = 1 - skew + skew * lo`` and ``t = skew * (hi - lo) / d`` the
    integral equals ``(hi - lo) * (skew * lo / d + (1 - skew) / d * g(t))``
    where ``g(t) = 1 - log1p(t) / t``; every term is nonnegative.
    """
    width = hi - lo
    d = 1.0 - skew + skew * lo
    t = skew * width / d
    return width * (skew * lo / d + (1.0 - skew) / d * _one_minus_log1p_ratio(t))


def min_precision(recall, skew):
    """Lowest precision attainable at ``recall`` for a dataset with ``skew``.

    Parameters
    ----------
    recall : float or array_like
        Recall in ``[0, 1]``.
    skew : float, Fraction or ClassBalance
        Proportion of positives, strictly between 0 and 1.

    Returns
    -------
    float or ndarray
        ``skew * recall / (1 - skew + skew * recall)``.

    Examples
    --------
    >>> round(min_precision(0.5, 1 / 3), 12)
    0.2
    """
    pi = as_skew(skew)
    r = np.asarray(recall, dtype=float)
    if not np.all(np.isfinite(r)) or np.any(r < 0.0) or np.any(r > 1.0):
        raise DomainError(f"recall must lie in [0, 1], got {recall!r}")
    out = pi * r / (1.0 - pi + pi * r)
    return float(out) if out.ndim == 0 else out


def is_achievable(point, skew) -> bool:
    """Whether a ``(recall, precision)`` point lies on or above the boundary.

    The comparison allows a relative slack of ``1e-12`` so points computed on
    the boundary itself count as achievable despite rounding.
    """
    if not isinstance(point, PRPoint):
        point = PRPoint(*point)
    bound = min_precision(point.recall, skew)
    return point.precision >= bound * (1.0 - ACHIEVABLE_RTOL)


@dataclass(frozen=True, eq=False)
class MinCurve:
    """The minimum PR curve for one skew.

    Calling the object evaluates the boundary analytically. ``recall`` and
    ``precision`` hold an optional plotting polyline sampled every
    ``grid_step``.
    """

    skew: float
    grid_step: float | None = None
    recall: np.ndarray | None = None
    precision: np.ndarray | None = None

    def __call__(self, recall):
        return min_precision(recall, self.skew)

    def area(self, recall_range=None) -> float:
        return aucpr_min_range(self.skew, recall_range)

    def sampled(self, grid_step: float = 0.01) -> "MinCurve":
        if not (0.0 < grid_step <= 1.0):
            raise DomainError(f"grid_step must lie in (0, 1], got {grid_step}")
        r = recall_grid(grid_step)
        return MinCurve(self.skew, grid_step, r, self(r))


def recall_grid(step: float, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
    """Inclusive grid from ``lo`` to ``hi``; the last cell may be short."""
    n = (hi - lo) / step
    k = int(round(n))
    if abs(n - k) < 1e-9:
        return np.linspace(lo, hi, k + 1)
    return np.append(lo + step * np.arange(int(math.floor(n)) + 1), hi)


def minimum_pr_curve(skew) -> MinCurve:
    """Analytic minimum PR curve for ``skew``."""
    return MinCurve(as_skew(skew))


def aucpr_min(skew) -> float:
    """Area of the unachievable region over the full recall range.

    Equals ``1 + (1 - skew) * ln(1 - skew) / skew``, evaluated without
    cancellation as ``skew -> 0``.

    >>> round(aucpr_min(0.5), 6)
    0.306853
    """
    pi = as_skew(skew)
    return _one_minus_log1p_ratio(pi / (1.0 - pi))


def aucpr_min_range(skew, recall_range=None) -> float:
    """Area of the unachievable region restricted to recall in ``[a, b]``.

    Equals ``(b - a) + (1 - skew) / skew * ln((skew*(a-1) + 1) / (skew*(b-1) + 1))``.
    With the full range this is :func:`aucpr_min`.
    """
    pi = as_skew(skew)
    rr = RecallRange.coerce(recall_range)
    return _area_under_boundary(pi, rr.lo, rr.hi)


def ap_min(pos: int, neg: int) -> float:
    """Average precision of the worst ranking: ``mean(i / (i + neg))`` over ``i = 1..pos``."""
    bal = ClassBalance(pos, neg)
    if bal.pos == 0:
        raise NoPositives("average precision needs at least one positive")
    i = np.arange(1, bal.pos + 1, dtype=float)
    return math.fsum((i / (i + bal.neg)).tolist()) / bal.pos

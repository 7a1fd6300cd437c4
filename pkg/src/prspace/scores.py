"""Summary scores that account for the unachievable region."""

from __future__ import annotations

import math

from .bounds import RecallRange, aucpr_min_range
from .core import as_skew
from .errors import DomainError, OutOfBounds, UndefinedScore

__all__ = [
    "aucnpr",
    "aucpr_bounds",
    "random_normalized_aucpr",
    "f_beta",
    "modified_f1",
]

BOUNDS_TOL = 1e-9


def _unit(name: str, value) -> float:
    v = float(value)
    if not math.isfinite(v) or not 0.0 <= v <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return v


def aucpr_bounds(skew, recall_range=None) -> tuple[float, float]:
    """``(minimum, maximum)`` AUCPR attainable at ``skew`` over ``recall_range``."""
    rr = RecallRange.coerce(recall_range)
    return aucpr_min_range(skew, rr), rr.width


def aucnpr(aucpr_value: float, skew, recall_range=None) -> float:
    """Normalized AUCPR: 0 for the worst ranking, 1 for a perfect one.

    Parameters
    ----------
    aucpr_value : float
        AUCPR measured over ``recall_range``.
    skew : float, Fraction or ClassBalance
    recall_range : optional
        Recall interval the area was computed over; full range by default.

    Raises
    ------
    OutOfBounds
        If ``aucpr_value`` lies outside ``[minimum, maximum]`` by more than
        ``1e-9``. Values within that slack are clipped.
    """
    lo, hi = aucpr_bounds(skew, recall_range)
    v = float(aucpr_value)
    if not math.isfinite(v) or v < lo - BOUNDS_TOL or v > hi + BOUNDS_TOL:
        raise OutOfBounds(f"AUCPR {v!r} outside its attainable range [{lo:.6g}, {hi:.6g}]")
    return min(1.0, max(0.0, (v - lo) / (hi - lo)))


def random_normalized_aucpr(aucpr_value: float, skew) -> float:
    """AUCPR rescaled so random guessing scores 0 and a perfect ranking 1.

    Unlike :func:`aucnpr` the result is negative for rankings worse than
    random, and its lower end depends on the skew. Kept for comparison.
    """
    pi = as_skew(skew)
    return (float(aucpr_value) - pi) / (1.0 - pi)


def f_beta(recall: float, precision: float, beta: float = 1.0) -> float:
    """Weighted harmonic mean of precision and recall."""
    r = _unit("recall", recall)
    p = _unit("precision", precision)
    if not beta > 0 or not math.isfinite(beta):
        raise DomainError(f"beta must be positive, got {beta!r}")
    if r == 0.0 and p == 0.0:
        raise UndefinedScore("F-beta is undefined when precision and recall are both 0")
    b2 = beta * beta
    return (1.0 + b2) * p * r / (b2 * p + r)


def modified_f1(recall: float, precision: float, skew) -> float:
    """F1 variant that is zero everywhere at or below random guessing.

    Above random guessing it is the harmonic mean of recall and
    ``(precision - skew) / (1 - skew)``. The whole minimum PR curve scores 0.
    The score is nondecreasing in each argument, but not strictly: every
    point with ``precision <= skew`` ties at 0.
    """
    r = _unit("recall", recall)
    p = _unit("precision", precision)
    pi = as_skew(skew)
    if p <= pi or r == 0.0:
        return 0.0
    q = (p - pi) / (1.0 - pi)
    # reciprocal form keeps every rounding step monotone in r and in p
    return 2.0 / (1.0 / r + 1.0 / q)

"""Domain types, confusion-matrix algebra and ranking cutpoints."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateDataset,
    DegenerateSkew,
    DomainError,
    EmptyDataset,
    NegativeCell,
    NoPositives,
    UndefinedPrecision,
)

__all__ = [
    "ClassBalance",
    "ConfusionMatrix",
    "PRPoint",
    "ScoredDataset",
    "Cutpoints",
    "validate_confusion",
    "pr_point",
    "cutpoints",
    "as_skew",
]


def _check_count(name: str, value) -> int:
    if isinstance(value, (bool, np.bool_)) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class ClassBalance:
    """Positive and negative example counts.

    ``skew`` is the proportion of positives, ``pos / (pos + neg)``.
    """

    pos: int
    neg: int

    def __post_init__(self):
        pos = _check_count("pos", self.pos)
        neg = _check_count("neg", self.neg)
        if pos < 0 or neg < 0:
            raise NegativeCell(f"class counts must be nonnegative, got pos={pos}, neg={neg}")
        if pos + neg == 0:
            raise EmptyDataset("a class balance needs at least one example")
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)

    @property
    def n(self) -> int:
        return self.pos + self.neg

    @property
    def skew(self) -> float:
        return self.pos / self.n

    @property
    def skew_fraction(self) -> Fraction:
        return Fraction(self.pos, self.n)

    @property
    def is_degenerate(self) -> bool:
        return self.pos == 0 or self.neg == 0


def as_skew(skew) -> float:
    """Coerce a skew given as a float, :class:`~fractions.Fraction` or
    :class:`ClassBalance` to a float in the open interval (0, 1)."""
    if isinstance(skew, ClassBalance):
        value = skew.skew
    else:
        try:
            value = float(skew)
        except (TypeError, ValueError):
            raise DegenerateSkew(f"skew must be a real number, got {skew!r}") from None
    if not (0.0 < value < 1.0):
        raise DegenerateSkew(f"skew must lie strictly between 0 and 1, got {value!r}")
    return value


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int
    balance: ClassBalance

    def __post_init__(self):
        if self.tp + self.fn != self.balance.pos or self.fp + self.tn != self.balance.neg:
            raise DomainError(
                f"cells ({self.tp}, {self.fp}, {self.fn}, {self.tn}) do not match "
                f"balance pos={self.balance.pos}, neg={self.balance.neg}"
            )
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise NegativeCell("confusion matrix cells must be nonnegative")


@dataclass(frozen=True)
class PRPoint:
    recall: float
    precision: float

    def __post_init__(self):
        for name in ("recall", "precision"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or not 0.0 <= v <= 1.0:
                raise DomainError(f"{name} must be a finite value in [0, 1], got {v!r}")
            object.__setattr__(self, name, v)

    def __iter__(self):
        yield self.recall
        yield self.precision


def validate_confusion(tp, fp, fn, tn) -> ConfusionMatrix:
    """Validate the four cells of a confusion matrix.

    The balance is derived from the cells (``pos = tp + fn``, ``neg = fp + tn``),
    so the only way a tuple can be invalid is a negative cell.

    Raises
    ------
    NegativeCell
        If any cell is negative.
    EmptyDataset
        If all four cells are zero.
    """
    cells = [_check_count(name, v) for name, v in zip(("tp", "fp", "fn", "tn"), (tp, fp, fn, tn))]
    bad = [name for name, v in zip(("tp", "fp", "fn", "tn"), cells) if v < 0]
    if bad:
        raise NegativeCell(f"negative cell(s): {', '.join(bad)} in {tuple(cells)}")
    tp, fp, fn, tn = cells
    if tp + fp + fn + tn == 0:
        raise EmptyDataset("all confusion matrix cells are zero")
    return ConfusionMatrix(tp, fp, fn, tn, ClassBalance(tp + fn, fp + tn))


def pr_point(cm: ConfusionMatrix) -> PRPoint:
    """Recall and precision of a confusion matrix.

    Precision is 0 when ``tp == 0`` and ``fp > 0``; it is undefined (and an
    error) when nothing is labeled positive.
    """
    if cm.balance.pos == 0:
        raise NoPositives("recall is undefined without positive examples")
    if cm.tp + cm.fp == 0:
        raise UndefinedPrecision("precision is undefined when tp = fp = 0")
    return PRPoint(cm.tp / cm.balance.pos, cm.tp / (cm.tp + cm.fp))


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _group_array(values, n: int, name: str):
    if values is None:
        return None
    arr = np.empty(n, dtype=object)
    vals = list(values)
    if len(vals) != n:
        raise DomainError(f"{name} has {len(vals)} entries, expected {n}")
    arr[:] = vals
    return _freeze(arr)


class ScoredDataset:
    """Labeled, scored examples with optional fold and task identifiers.

    Parameters
    ----------
    labels : array_like of {0, 1}
    scores : array_like of float
        Finite scores; only their order matters.
    folds, tasks : sequence of hashable, optional
        Group identifiers, one per record. ``None`` entries mark records
        without a group.
    """

    __slots__ = ("labels", "scores", "folds", "tasks")

    def __init__(self, labels, scores, folds=None, tasks=None):
        labels = np.asarray(labels)
        scores = np.asarray(scores, dtype=float)
        if labels.ndim != 1 or scores.ndim != 1 or labels.shape != scores.shape:
            raise DomainError("labels and scores must be 1-d arrays of equal length")
        if labels.size and not np.all((labels == 0) | (labels == 1)):
            raise DomainError("labels must be 0 or 1")
        if not np.all(np.isfinite(scores)):
            raise DomainError("scores must be finite")
        object.__setattr__(self, "labels", _freeze(labels.astype(np.int8)))
        object.__setattr__(self, "scores", _freeze(scores.copy()))
        object.__setattr__(self, "folds", _group_array(folds, labels.size, "folds"))
        object.__setattr__(self, "tasks", _group_array(tasks, labels.size, "tasks"))

    def __setattr__(self, name, value):
        raise AttributeError("ScoredDataset is immutable")

    @classmethod
    def from_records(cls, records: Iterable[Sequence]) -> "ScoredDataset":
        """Build from ``(label, score[, fold[, task]])`` tuples."""
        records = list(records)
        labels = [r[0] for r in records]
        scores = [r[1] for r in records]
        width = max((len(r) for r in records), default=2)
        folds = [r[2] if len(r) > 2 else None for r in records] if width > 2 else None
        tasks = [r[3] if len(r) > 3 else None for r in records] if width > 3 else None
        return cls(np.asarray(labels, dtype=np.int64), np.asarray(scores, dtype=float), folds, tasks)

    def __len__(self) -> int:
        return int(self.labels.size)

    def __repr__(self) -> str:
        return f"ScoredDataset(pos={self.pos}, neg={self.neg})"

    @property
    def pos(self) -> int:
        return int(self.labels.sum())

    @property
    def neg(self) -> int:
        return len(self) - self.pos

    @property
    def balance(self) -> ClassBalance:
        return ClassBalance(self.pos, self.neg)

    def records(self):
        folds = self.folds if self.folds is not None else [None] * len(self)
        tasks = self.tasks if self.tasks is not None else [None] * len(self)
        return [
            (int(l), float(s), f, t) for l, s, f, t in zip(self.labels, self.scores, folds, tasks)
        ]

    def take(self, index) -> "ScoredDataset":
        """Subset by integer index array or boolean mask, keeping order."""
        index = np.asarray(index)
        return ScoredDataset(
            self.labels[index],
            self.scores[index],
            None if self.folds is None else self.folds[index],
            None if self.tasks is None else self.tasks[index],
        )

    def groups(self, by: str) -> dict[Hashable, "ScoredDataset"]:
        """Split into sub-datasets keyed by fold or task id, sorted by id."""
        if by not in ("fold", "task"):
            raise ValueError(f"group_by must be 'fold' or 'task', got {by!r}")
        ids = self.folds if by == "fold" else self.tasks
        if ids is None:
            raise DomainError(f"dataset has no {by} identifiers")
        if any(i is None for i in ids):
            raise DomainError(f"some records have no {by} identifier")
        keys = sorted(set(ids), key=lambda k: (str(type(k)), k))
        return {k: self.take(np.array([i == k for i in ids])) for k in keys}

    def require_both_classes(self) -> ClassBalance:
        if len(self) == 0:
            raise DegenerateDataset("dataset is empty")
        bal = self.balance
        if bal.is_degenerate:
            raise DegenerateDataset(
                f"dataset needs at least one positive and one negative (pos={bal.pos}, neg={bal.neg})"
            )
        return bal


@dataclass(frozen=True, eq=False)
class Cutpoints:
    """Cumulative ``(tp, fp)`` counts after each distinct score threshold.

    Starts at ``(0, 0)`` and ends at ``(pos, neg)``.
    """

    balance: ClassBalance
    tp: np.ndarray
    fp: np.ndarray

    def __post_init__(self):
        tp = np.asarray(self.tp, dtype=np.int64)
        fp = np.asarray(self.fp, dtype=np.int64)
        if tp.shape != fp.shape or tp.ndim != 1 or tp.size < 2:
            raise DomainError("cutpoints need matching 1-d tp/fp arrays with at least two points")
        if tp[0] != 0 or fp[0] != 0:
            raise DomainError("cutpoints must start at (0, 0)")
        if tp[-1] != self.balance.pos or fp[-1] != self.balance.neg:
            raise DomainError("cutpoints must end at (pos, neg)")
        dtp, dfp = np.diff(tp), np.diff(fp)
        if np.any(dtp < 0) or np.any(dfp < 0) or np.any(dtp + dfp < 1):
            raise DomainError("cutpoints must be strictly increasing in tp + fp")
        object.__setattr__(self, "tp", _freeze(tp))
        object.__setattr__(self, "fp", _freeze(fp))

    @property
    def points(self) -> list[tuple[int, int]]:
        return list(zip(self.tp.tolist(), self.fp.tolist()))

    def __len__(self) -> int:
        return int(self.tp.size)

    def __eq__(self, other):
        if not isinstance(other, Cutpoints):
            return NotImplemented
        return (
            self.balance == other.balance
            and np.array_equal(self.tp, other.tp)
            and np.array_equal(self.fp, other.fp)
        )


def cutpoints(data: ScoredDataset) -> Cutpoints:
    """Sweep a threshold down the ranking and record cumulative counts.

    Records are sorted by score, descending. Records sharing a score form one
    step, so ties move ``tp`` and ``fp`` together.

    Examples
    --------
    >>> ds = ScoredDataset.from_records([(0, 0.9), (0, 0.8), (1, 0.7)])
    >>> cutpoints(ds).points
    [(0, 0), (0, 1), (0, 2), (1, 2)]
    """
    balance = data.require_both_classes()
    order = np.argsort(-data.scores, kind="stable")
    scores = data.scores[order]
    labels = data.labels[order].astype(np.int64)
    # last index of every tie group
    ends = np.flatnonzero(np.append(scores[1:] != scores[:-1], True))
    ctp = np.cumsum(labels)[ends]
    cfp = (ends + 1) - ctp
    return Cutpoints(balance, np.concatenate(([0], ctp)), np.concatenate(([0], cfp)))

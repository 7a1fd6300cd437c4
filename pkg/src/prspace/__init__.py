"""Precision-recall analysis that accounts for the unachievable region.

For a dataset with a fraction ``pi`` of positives, no ranking can produce a PR
curve below ``pi * r / (1 - pi + pi * r)``. This package computes that bound,
the area under it, the minimum average precision, normalized AUCPR (AUCNPR),
and skew-aware aggregates across folds, tasks and downsampled datasets.
"""

__version__ = "0.1.0"

from .aggregate import (
    AggregateReport,
    MetricsReport,
    aggregate,
    group_metrics,
    mean_scores,
    merged_metrics,
    metrics_report,
)
from .bounds import (
    FULL_RANGE,
    MinCurve,
    RecallRange,
    ap_min,
    aucpr_min,
    aucpr_min_range,
    is_achievable,
    min_precision,
    minimum_pr_curve,
)
from .core import (
    ClassBalance,
    ConfusionMatrix,
    Cutpoints,
    PRPoint,
    ScoredDataset,
    cutpoints,
    pr_point,
    validate_confusion,
)
from .curves import (
    AreaResult,
    PRCurve,
    VerticalAverage,
    aucpr,
    average_precision,
    pr_curve,
    vertical_average,
)
from .errors import *  # noqa: F401,F403
from .sampling import (
    Ratio,
    SweepRow,
    calibrated_scorer_dataset,
    downsample_negatives,
    ratio_sweep,
    sweep_spread,
)
from . import io, plot
from .plot import PlotSpec, render_svg
from .scores import aucnpr, aucpr_bounds, f_beta, modified_f1, random_normalized_aucpr

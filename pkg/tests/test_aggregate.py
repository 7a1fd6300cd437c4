import math
from decimal import ROUND_HALF_UP, Decimal

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from prspace import (
    MetricsReport,
    ScoredDataset,
    aggregate,
    aucnpr,
    aucpr_min,
    group_metrics,
    mean_scores,
    merged_metrics,
    metrics_report,
)
from prspace.errors import DegenerateDataset, DegenerateGroup, DomainError, EmptyInput

from helpers import perfect_ranking, random_dataset, worst_ranking


def concat(*parts, key="fold"):
    labels = np.concatenate([p.labels for p in parts])
    scores = np.concatenate([p.scores for p in parts])
    ids = np.concatenate([[i] * len(p) for i, p in enumerate(parts)])
    return ScoredDataset(labels, scores, **{key + "s": ids})


def three_places(x):
    """Round half up, as a printed table would."""
    return float(Decimal(repr(x)).quantize(Decimal("0.001"), ROUND_HALF_UP))


def fake_report(aucpr, aucnpr, skew=0.05, group=None, pos=10, neg=190):
    return MetricsReport(
        pos=pos, neg=neg, skew=skew, aucpr=aucpr, aucpr_min=aucpr_min(skew), aucpr_max=1.0,
        aucnpr=aucnpr, ap=aucpr, ap_min=0.0, group=group,
    )


class TestMetricsReport:
    def test_invariants_enforced(self):
        with pytest.raises(DomainError):
            fake_report(0.01, 0.0, skew=0.5)
        with pytest.raises(DomainError):
            fake_report(0.5, 1.5)

    def test_dict_round_trip(self, rng):
        rep = metrics_report(random_dataset(rng, 20, 30), (0.2, 0.9), group="x")
        assert MetricsReport.from_dict(rep.to_dict()) == rep
        assert rep.to_dict()["range"] == [0.2, 0.9]

    def test_operating_point_threshold(self):
        ds = ScoredDataset.from_records([(1, 0.9), (0, 0.8), (1, 0.7), (0, 0.1)])
        rep = metrics_report(ds, threshold=0.75)
        assert (rep.op_recall, rep.op_precision) == (0.5, 0.5)
        assert rep.f_beta == pytest.approx(0.5)

    def test_operating_point_best_cutpoint(self):
        ds = ScoredDataset.from_records([(1, 0.9), (0, 0.8), (1, 0.7), (0, 0.1)])
        rep = metrics_report(ds)
        # cutpoints give F1 of 2/3, 1/2, 4/5, 2/3
        assert rep.threshold == 0.7
        assert rep.f_beta == pytest.approx(0.8)


class TestGroupMetrics:
    def test_perfect_folds(self):
        reps = group_metrics(concat(perfect_ranking(5, 5), perfect_ranking(3, 9)))
        assert [r.group for r in reps] == [0, 1]
        for r in reps:
            assert r.aucpr == pytest.approx(1.0) and r.aucnpr == pytest.approx(1.0)

    def test_worst_fold(self):
        reps = group_metrics(concat(perfect_ranking(5, 5), worst_ranking(6, 6)))
        assert reps[1].aucnpr == pytest.approx(0.0, abs=1e-12)
        assert reps[1].aucpr == pytest.approx(0.3069, abs=5e-5)

    def test_own_skew_per_group(self):
        reps = group_metrics(concat(worst_ranking(1, 9), worst_ranking(5, 5), key="task"), "task")
        assert [r.skew for r in reps] == [0.1, 0.5]
        assert all(abs(r.aucnpr) < 1e-12 for r in reps)

    def test_degenerate_group_named(self):
        bad = concat(perfect_ranking(2, 2), ScoredDataset([1, 1], [0.3, 0.4]))
        with pytest.raises(DegenerateGroup) as info:
            group_metrics(bad)
        assert info.value.group == 1
        assert isinstance(info.value, DegenerateDataset)

    def test_missing_group_column(self):
        with pytest.raises(DomainError):
            group_metrics(perfect_ranking(2, 2), "task")


class TestMeanScores:
    def test_task_table_means(self):
        aucprs = [1.000, 1.000, 0.509, 0.624, 0.267, 1.000]
        aucnprs = [1.000, 1.000, 0.325, 0.611, 0.141, 1.000]
        agg = mean_scores([fake_report(a, n, group=i) for i, (a, n) in enumerate(zip(aucprs, aucnprs))])
        # the aucnpr mean is 0.6795 in decimal, a rounding tie
        assert three_places(agg.mean_aucpr) == 0.733
        assert three_places(agg.mean_aucnpr) == 0.680

    def test_single_report(self):
        agg = mean_scores([fake_report(0.4, 0.3)])
        assert (agg.mean_aucpr, agg.mean_aucnpr, agg.mean_ap) == (0.4, 0.3, 0.4)
        assert agg.skew_spread == 0.0 and not agg.skew_warning

    def test_empty(self):
        with pytest.raises(EmptyInput):
            mean_scores([])

    def test_weighted(self):
        reps = [fake_report(0.2, 0.1, pos=1, neg=19), fake_report(0.8, 0.7, pos=3, neg=57)]
        assert mean_scores(reps).mean_aucpr == pytest.approx(0.5)
        assert mean_scores(reps, weighted=True).mean_aucpr == pytest.approx(0.65)

    def test_skew_warning(self):
        reps = [fake_report(0.5, 0.5, skew=0.05), fake_report(0.5, 0.5, skew=0.2)]
        agg = mean_scores(reps)
        assert agg.skew_spread == pytest.approx(0.15) and agg.skew_warning
        assert not mean_scores(reps, skew_spread_threshold=0.2).skew_warning

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(2, 6))
    def test_means_are_arithmetic(self, seed, k):
        rng = np.random.default_rng(seed)
        data = concat(*[random_dataset(rng, int(rng.integers(1, 15)), int(rng.integers(1, 15))) for _ in range(k)])
        agg = aggregate(data)
        assert agg.mean_aucpr == pytest.approx(sum(r.aucpr for r in agg.reports) / k, abs=1e-12)
        assert agg.mean_aucnpr == pytest.approx(sum(r.aucnpr for r in agg.reports) / k, abs=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_equal_skews_give_affine_means(self, seed):
        rng = np.random.default_rng(seed)
        data = concat(*[random_dataset(rng, 6, 14, 5) for _ in range(4)])
        agg = aggregate(data)
        lo = aucpr_min(0.3)
        assert agg.mean_aucnpr == pytest.approx((agg.mean_aucpr - lo) / (1 - lo), abs=1e-12)


class TestMerged:
    def test_pooled_ranking_differs_from_mean(self):
        a = ScoredDataset.from_records([(1, 0.9), (0, 0.8)])
        b = ScoredDataset.from_records([(0, 0.4), (1, 0.3)])
        agg = aggregate(concat(a, b))
        assert agg.mean_aucpr == pytest.approx((1 + 1 + math.log(0.5)) / 2, rel=1e-14)
        assert agg.merged.aucpr == pytest.approx(1 - math.log(4 / 3), rel=1e-14)
        assert agg.merged.group == "merged"

    def test_pooled_skew(self):
        m = merged_metrics(concat(worst_ranking(5, 5), worst_ranking(1, 9)))
        assert m.skew == pytest.approx(0.3)

    def test_identical_groups(self, rng):
        d = random_dataset(rng, 7, 11)
        one = metrics_report(d)
        m = merged_metrics(concat(d, d))
        assert m.aucpr == pytest.approx(one.aucpr, rel=1e-13)
        assert m.skew == one.skew

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_partition_invariant(self, seed):
        rng = np.random.default_rng(seed)
        d = random_dataset(rng, 12, 20, 6)
        folds_a = rng.integers(0, 3, len(d))
        folds_b = rng.integers(0, 5, len(d))
        m_a = merged_metrics(ScoredDataset(d.labels, d.scores, folds=folds_a))
        m_b = merged_metrics(ScoredDataset(d.labels, d.scores, folds=folds_b))
        assert m_a == m_b

    def test_merged_aucnpr_uses_pooled_skew(self):
        m = merged_metrics(concat(worst_ranking(5, 5), worst_ranking(1, 9)))
        assert m.aucnpr == pytest.approx(aucnpr(m.aucpr, 0.3), rel=1e-14)


class TestAggregate:
    def test_vertical_average_optional(self):
        data = concat(perfect_ranking(5, 5), worst_ranking(5, 5))
        assert aggregate(data).vertical_average is None
        va = aggregate(data, grid_step=0.1).vertical_average
        assert va.recall.size == 11
        assert va.precision[-1] == pytest.approx(0.75)

    def test_task_grouping(self):
        agg = aggregate(concat(perfect_ranking(2, 8), worst_ranking(2, 2), key="task"), "task", (0.5, 1))
        assert agg.group_by == "task"
        assert all(r.range == (0.5, 1.0) for r in agg.reports)
        assert agg.reports[0].aucpr == pytest.approx(0.5)

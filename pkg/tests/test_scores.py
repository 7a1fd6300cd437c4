import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from prspace import (
    aucnpr,
    aucpr_bounds,
    aucpr_min,
    aucpr_min_range,
    f_beta,
    min_precision,
    modified_f1,
    random_normalized_aucpr,
)
from prspace.errors import DegenerateSkew, DomainError, OutOfBounds, UndefinedScore

skews = st.floats(1e-4, 1 - 1e-4)


class TestAucnpr:
    @pytest.mark.parametrize("pi", [0.001, 0.05, 0.5, 0.9])
    def test_endpoints(self, pi):
        assert aucnpr(aucpr_min(pi), pi) == pytest.approx(0.0, abs=1e-12)
        assert aucnpr(1.0, pi) == 1.0

    def test_restricted_endpoints(self):
        lo, hi = aucpr_bounds(0.2, (0.5, 1))
        assert hi == 0.5
        assert lo == pytest.approx(aucpr_min_range(0.2, (0.5, 1)))
        assert aucnpr(lo, 0.2, (0.5, 1)) == pytest.approx(0.0, abs=1e-12)
        assert aucnpr(0.5, 0.2, "0.5:1") == 1.0

    def test_five_percent_skew(self):
        # unachievable floor at 0.05 is 0.025432
        assert aucnpr(0.624, 0.05) == pytest.approx(0.6142, abs=1e-4)

    def test_by_hand(self):
        lo = 1 + math.log(0.5)
        assert aucnpr(0.5, 0.5) == pytest.approx((0.5 - lo) / (1 - lo), rel=1e-14)

    @pytest.mark.parametrize("v", [0.2, 1.1, float("nan")])
    def test_out_of_bounds(self, v):
        with pytest.raises(OutOfBounds):
            aucnpr(v, 0.5)

    def test_small_excess_clipped(self):
        assert aucnpr(1.0 + 1e-12, 0.3) == 1.0
        assert aucnpr(aucpr_min(0.3) - 1e-12, 0.3) == 0.0

    def test_degenerate_skew(self):
        with pytest.raises(DegenerateSkew):
            aucnpr(0.5, 1.0)

    @given(skews, st.floats(0, 1), st.floats(0, 1))
    def test_strictly_increasing(self, pi, a, b):
        lo = aucpr_min(pi)
        x, y = sorted((lo + a * (1 - lo), lo + b * (1 - lo)))
        if y - x < 1e-9:
            return
        assert aucnpr(x, pi) < aucnpr(y, pi)

    def test_skew_independent_endpoints(self):
        vals = [aucnpr(aucpr_min(p), p) for p in np.linspace(0.01, 0.99, 50)]
        np.testing.assert_allclose(vals, 0.0, atol=1e-12)


class TestRandomNormalized:
    def test_below_random_is_negative(self):
        assert random_normalized_aucpr(0.1, 0.3) == pytest.approx(-0.2857, abs=1e-4)

    def test_random_and_perfect(self):
        assert random_normalized_aucpr(0.3, 0.3) == 0.0
        assert random_normalized_aucpr(1.0, 0.3) == 1.0

    def test_floor_moves_with_skew(self):
        # the worst ranking is not pinned to one value under this scheme
        worst = [random_normalized_aucpr(aucpr_min(p), p) for p in (0.01, 0.5, 0.9)]
        assert len({round(w, 6) for w in worst}) == 3
        assert all(w < 0 for w in worst)


class TestFBeta:
    def test_f1_harmonic_mean(self):
        assert f_beta(0.5, 1.0) == pytest.approx(2 / 3)
        assert f_beta(0.9, 0.3) == pytest.approx(0.45)
        assert f_beta(0.3, 0.9) == pytest.approx(0.45)

    def test_f2(self):
        r, p = 0.4, 0.8
        assert f_beta(r, p, 2) == pytest.approx(5 * p * r / (4 * p + r))

    @given(st.floats(0.01, 1), st.floats(0.01, 1))
    def test_f1_symmetric(self, r, p):
        assert f_beta(r, p) == pytest.approx(f_beta(p, r), rel=1e-12)

    @given(st.floats(0.05, 1), st.floats(0.05, 1))
    def test_beta_limits(self, r, p):
        assert f_beta(r, p, 1e-6) == pytest.approx(p, abs=1e-5)
        assert f_beta(r, p, 1e6) == pytest.approx(r, abs=1e-5)

    def test_undefined_at_origin(self):
        with pytest.raises(UndefinedScore):
            f_beta(0.0, 0.0)

    @pytest.mark.parametrize("args", [(1.2, 0.5), (0.5, -0.1), (0.5, 0.5, 0), (0.5, 0.5, -1)])
    def test_domain(self, args):
        with pytest.raises(DomainError):
            f_beta(*args)


class TestModifiedF1:
    def test_value(self):
        q = (0.9 - 0.33) / 0.67
        assert modified_f1(0.3, 0.9, 0.33) == pytest.approx(2 * 0.3 * q / (0.3 + q), rel=1e-14)
        assert modified_f1(0.3, 0.9, 0.33) == pytest.approx(0.4436, abs=1e-4)

    def test_random_and_below(self):
        assert modified_f1(0.9, 0.33, 0.33) == 0.0
        assert modified_f1(0.9, 0.3, 0.33) == 0.0

    def test_perfect(self):
        assert modified_f1(1.0, 1.0, 0.2) == 1.0

    @given(skews, st.floats(0, 1))
    def test_zero_on_minimum_curve(self, pi, r):
        assert modified_f1(r, float(min_precision(r, pi)), pi) == 0.0

    @given(skews, st.floats(0, 1), st.floats(0, 1), st.floats(0, 1))
    def test_nondecreasing(self, pi, r, p, step):
        r2 = min(1.0, r + step * (1 - r))
        p2 = min(1.0, p + step * (1 - p))
        assert modified_f1(r2, p, pi) >= modified_f1(r, p, pi)
        assert modified_f1(r, p2, pi) >= modified_f1(r, p, pi)

    def test_monotone_one_ulp_above_random(self):
        p = np.nextafter(1 / 3, 1)
        vals = [modified_f1(r, p, 1 / 3) for r in np.linspace(0, 1, 1001)]
        assert all(b >= a for a, b in zip(vals, vals[1:]))

    def test_never_exceeds_one(self):
        grid = np.linspace(0, 1, 41)
        assert max(modified_f1(r, p, 0.1) for r in grid for p in grid) == 1.0

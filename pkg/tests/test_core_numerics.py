import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transcendent_lab.core_numerics import (
    AccelMethod,
    SeriesResult,
    TruncationPolicy,
    accelerate,
    alt_series_sum,
    bernoulli_fraction,
    bernoulli_numbers,
    binet,
    central_diff,
    log_binomial,
    log_gamma,
    log_gamma_array,
    log_gamma_ratio,
)
from transcendent_lab.errors import ArityError, DomainError, UnsupportedError
from transcendent_lab.products import wallis_partial


def mp_lgamma(x):
    return float(mpmath.loggamma(mpmath.mpf(x)))


class TestLogGamma:
    def test_one_is_zero(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-15)

    def test_half_is_log_sqrt_pi(self):
        # 40-digit oracle
        assert mp_lgamma(0.5) == 0.5723649429247001
        assert log_gamma(0.5) == pytest.approx(0.5723649429247001, rel=1e-15)

    def test_six_is_log_120(self):
        assert log_gamma(6.0) == pytest.approx(math.log(math.factorial(5)), rel=1e-15)

    @pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
    def test_nonpositive_rejected(self, x):
        with pytest.raises(DomainError):
            log_gamma(x)

    def test_accuracy_against_mpmath(self):
        rng = np.random.default_rng(7)
        xs = np.concatenate([10 ** rng.uniform(-6, 7, 400), [0.1, 0.5, 1, 1.5, 2, 2.5, 3, 10, 1e7 - 1]])
        for x in xs:
            ref = mp_lgamma(x)
            assert abs(log_gamma(x) - ref) <= 1e-14 * max(1.0, abs(ref)), x

    def test_array_matches_scalar(self):
        xs = np.array([0.01, 0.3, 0.5, 1.0, 7.25, 1e3, 1e6])
        got = log_gamma_array(xs)
        np.testing.assert_allclose(got, [log_gamma(x) for x in xs], rtol=1e-15, atol=1e-15)

    def test_array_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            log_gamma_array([1.0, 0.0])

    def test_reflection_sanity(self):
        assert math.exp(log_gamma(0.5)) ** 2 == pytest.approx(math.pi, abs=1e-12)

    @pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.5, 10.0, 1000.0])
    def test_recurrence_fixed_points(self, x):
        assert abs(log_gamma(x + 1) - log_gamma(x) - math.log(x)) <= 1e-12 * max(1.0, log_gamma(x + 1))
        assert abs(log_gamma_ratio(x + 1, x) - math.log(x)) <= 1e-12

    def test_recurrence_random(self):
        rng = np.random.default_rng(11)
        for x in rng.uniform(0.0, 1e4, 1000):
            if x == 0.0:
                continue
            # plain difference is bounded by the ulp of ln Gamma(x+1)
            assert abs(log_gamma(x + 1) - log_gamma(x) - math.log(x)) <= 1e-12 * max(1.0, log_gamma(x + 1))
            assert abs(log_gamma_ratio(x + 1, x) - math.log(x)) <= 1e-12

    def test_binet_tends_to_zero(self):
        assert abs(binet(1e6)) < 1e-6
        assert binet(10.0) == pytest.approx(1 / 120 - 1 / (360 * 1e3), abs=1e-8)

    @given(st.floats(min_value=1.0, max_value=1e5), st.sampled_from([0.5, 1.0, 1.5]))
    @settings(max_examples=200, deadline=None)
    def test_ratio_against_mpmath(self, b, shift):
        ref = float(mpmath.loggamma(mpmath.mpf(b) + shift) - mpmath.loggamma(b))
        assert log_gamma_ratio(b + shift, b) == pytest.approx(ref, abs=1e-13, rel=1e-14)


class TestLogBinomial:
    def test_small(self):
        assert log_binomial(4, 2) == pytest.approx(1.791759469228055, rel=1e-15)
        assert log_binomial(0, 0) == 0.0

    def test_sixty_thirty(self):
        exact = 118264581564861424
        assert math.comb(60, 30) == exact
        assert log_binomial(60, 30) == pytest.approx(math.log(exact), rel=1e-15)
        assert log_binomial(60, 30) == pytest.approx(39.31170072601126, abs=1e-12)

    @pytest.mark.parametrize("n,k", [(3, 4), (3, -1), (-1, 0)])
    def test_out_of_range(self, n, k):
        with pytest.raises(DomainError):
            log_binomial(n, k)

    def test_lgamma_path_above_62(self):
        for n, k in [(63, 20), (100, 50), (500, 3), (1000, 999)]:
            assert log_binomial(n, k) == pytest.approx(math.log(math.comb(n, k)), rel=1e-13)

    @given(st.integers(min_value=0, max_value=62).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
    def test_symmetry_exact_path(self, nk):
        n, k = nk
        assert log_binomial(n, k) == log_binomial(n, n - k)

    @given(st.integers(min_value=63, max_value=5000).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
    def test_symmetry_lgamma_path(self, nk):
        n, k = nk
        assert abs(log_binomial(n, k) - log_binomial(n, n - k)) <= 1e-12


class TestBernoulli:
    def test_first_values(self):
        b = bernoulli_numbers(6)
        assert b[0] == 1 / 6
        assert b[1] == -1 / 30
        assert b[5] == -691 / 2730

    def test_limit(self):
        assert len(bernoulli_numbers(40)) == 40
        with pytest.raises(UnsupportedError):
            bernoulli_numbers(41)

    def _all(self, top):
        return [bernoulli_fraction(j) for j in range(top + 1)]

    @pytest.mark.parametrize("n", range(2, 25, 2))
    def test_recurrence_residual(self, n):
        exact = self._all(n)
        assert sum(math.comb(n + 1, j) * exact[j] for j in range(n + 1)) == Fraction(0)
        floats = [1.0, -0.5] + [v for b in bernoulli_numbers(n // 2) for v in (b, 0.0)]
        terms = [math.comb(n + 1, j) * floats[j] for j in range(n + 1)]
        residual = abs(math.fsum(terms))
        assert residual <= 1e-12 * math.fsum(map(abs, terms))
        if n <= 16:
            assert residual <= 1e-12


class TestAccelerate:
    def test_raw_is_last(self):
        assert accelerate([1.0, 1.4, 1.5], AccelMethod.RAW) == 1.5

    def test_aitken_geometric(self):
        partials = [1 - 2.0**-n for n in range(1, 6)]
        assert accelerate(partials, "aitken") == 1.0

    @given(
        st.floats(-10, 10),
        st.floats(0.1, 10),
        st.floats(-0.9, 0.9).filter(lambda r: abs(r) > 0.05),
        st.integers(0, 20),
    )
    def test_aitken_recovers_geometric_limit(self, a, c, r, start):
        partials = [a - c * r**n for n in range(start, start + 3)]
        assert accelerate(partials, AccelMethod.AITKEN) == pytest.approx(a, abs=1e-12 * max(1.0, c))

    def test_richardson_on_wallis(self):
        partials = [wallis_partial(n) for n in (16, 32, 64)]
        raw = abs(partials[-1] - math.pi / 2)
        est = abs(accelerate(partials, AccelMethod.RICHARDSON, levels=2) - math.pi / 2)
        assert est * 100 <= raw

    def test_richardson_exact_for_polynomial_in_inverse_n(self):
        f = lambda n: 2.0 + 3.0 / n - 5.0 / n**2 + 7.0 / n**3  # noqa: E731
        partials = [f(10 * 2**k) for k in range(4)]
        assert accelerate(partials, "richardson", levels=3) == pytest.approx(2.0, abs=1e-13)

    def test_alt_cvz_from_partials(self):
        partials = np.cumsum([(-1) ** k / (k + 1) for k in range(25)])
        assert accelerate(partials, AccelMethod.ALT_CVZ) == pytest.approx(math.log(2), abs=1e-14)

    def test_arity(self):
        with pytest.raises(ArityError):
            accelerate([1.0, 2.0], "raw")
        with pytest.raises(ArityError):
            accelerate([1.0, 2.0, 3.0], "richardson", levels=3)

    def test_levels_cap(self):
        with pytest.raises(UnsupportedError):
            accelerate([1.0] * 12, "richardson", levels=9)

    @given(st.lists(st.floats(-1e6, 1e6), min_size=3, max_size=20))
    def test_raw_identity(self, xs):
        assert accelerate(xs, AccelMethod.RAW) == xs[-1]


class TestAltSeries:
    def test_log2(self):
        r = alt_series_sum(lambda k: 1.0 / (k + 1), 20)
        assert abs(r.value - 0.6931471805599453) <= 1e-12
        assert r.terms_used == 20

    def test_eta2(self):
        r = alt_series_sum(lambda k: 1.0 / (k + 1) ** 2, 25)
        assert abs(r.value - math.pi**2 / 12) <= 1e-12
        assert r.converged and r.tail_bound <= 1e-13

    def test_constant_sequence_abel_half(self):
        # CVZ on a_k = 1 is exactly 1/2 - (-1)^n / (2 T_n(3))
        for n in (10, 11, 20):
            r = alt_series_sum(lambda k: 1.0, n)
            oracle = 0.5 - (-1) ** n / (2 * math.cosh(n * math.acosh(3.0)))
            assert r.value == pytest.approx(oracle, abs=1e-15)
        assert alt_series_sum(lambda k: 1.0, 10).value == pytest.approx(0.5, abs=1e-7)

    def test_arity(self):
        with pytest.raises(ArityError):
            alt_series_sum(lambda k: 1.0, 1)

    def test_error_decreases_with_terms(self):
        errs = [abs(alt_series_sum(lambda k: 1.0 / (k + 1), n).value - math.log(2)) for n in range(5, 26)]
        for a, b in zip(errs, errs[1:]):
            assert b <= a + 1e-15

    def test_bound_holds_for_totally_monotone(self):
        for n in range(2, 25):
            r = alt_series_sum(lambda k: 1.0 / (k + 1), n)
            assert abs(r.value - math.log(2)) <= r.tail_bound + 1e-16


class TestCentralDiff:
    def test_examples(self):
        assert central_diff(lambda x: x * x, 3.0, 1e-5) == pytest.approx(6.0, abs=1e-9)
        assert central_diff(math.exp, 0.0, 1e-5) == pytest.approx(1.0, abs=1e-10)
        assert central_diff(math.log, 2.0, 1e-5) == pytest.approx(0.5, abs=1e-10)

    def test_step_must_be_positive(self):
        with pytest.raises(DomainError):
            central_diff(math.exp, 0.0, 0.0)


class TestPolicy:
    def test_defaults(self):
        p = TruncationPolicy()
        assert p.max_terms >= 1 and p.tail_tol > 0

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("TRANSCENDENT_LAB_MAX_TERMS", "123")
        assert TruncationPolicy().max_terms == 123

    @pytest.mark.parametrize("kwargs", [{"max_terms": 0}, {"tail_tol": 0.0}, {"tail_tol": -1.0}, {"max_terms": 2.5}])
    def test_invalid(self, kwargs):
        with pytest.raises(DomainError):
            TruncationPolicy(**kwargs)

    def test_converged_implies_within_tol(self):
        p = TruncationPolicy(10, 1e-3)
        assert SeriesResult.from_bound(1.0, 3, 1e-4, p).converged
        assert not SeriesResult.from_bound(1.0, 3, 1e-2, p).converged
        assert not SeriesResult.from_bound(1.0, 3, None, p).converged

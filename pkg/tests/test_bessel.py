import math

import pytest
import scipy.special

from catseries.analytic import g_closed
from catseries.bessel import (
    DEFAULT_CONFIG,
    ImproperIntegralConfig,
    bessel_k,
    g_mellin,
    mellin_kernel_F,
)
from catseries.errors import DomainError, NotConvergedError
from catseries.series import sum_g

# frozen from the defining-integral oracle (composite Gauss-Legendre on the
# cosh form, cross-checked against scipy.special.kv at build time)
K0_AT_2 = 0.11389387274953346
K1_AT_2 = 0.13986588181652243


class TestBesselK:
    def test_frozen_fixture_values(self):
        assert bessel_k(0, 2.0) == pytest.approx(K0_AT_2, rel=1e-12)
        assert bessel_k(1, 2.0) == pytest.approx(K1_AT_2, rel=1e-12)

    def test_against_scipy_over_validated_box(self):
        for v in range(0, 9):
            for x in (0.05, 0.2, 1.0, 2.0, 5.0, 10.0, 50.0):
                ref = float(scipy.special.kv(v, x))
                assert bessel_k(v, x) == pytest.approx(ref, rel=1e-9), (v, x)

    def test_order_symmetry_exact(self):
        for v in range(1, 9):
            assert bessel_k(-v, 2.0) == bessel_k(v, 2.0)

    def test_recurrence(self):
        # K_{v+1}(x) = K_{v-1}(x) + (2v/x) K_v(x)
        for v in range(1, 6):
            for x in (0.5, 1.0, 2.0, 5.0, 10.0):
                lhs = bessel_k(v + 1, x)
                rhs = bessel_k(v - 1, x) + 2 * v / x * bessel_k(v, x)
                assert abs(lhs - rhs) <= 1e-7 * lhs

    def test_domain_error(self):
        with pytest.raises(DomainError):
            bessel_k(0, 0.0)
        with pytest.raises(DomainError):
            bessel_k(0, -1.0)

    def test_warns_outside_box(self):
        with pytest.warns(UserWarning):
            bessel_k(9, 2.0)
        with pytest.warns(UserWarning):
            bessel_k(0, 0.01)


class TestMellinKernel:
    def test_m0_is_scaled_k1(self):
        assert mellin_kernel_F(0, 1.0) == pytest.approx(2 * bessel_k(1, 2.0), rel=1e-12)

    def test_m1_combination(self):
        # 2 (x K_0(2 sqrt x) - sqrt x K_1(2 sqrt x)) at x = 1
        expected = 2 * (bessel_k(0, 2.0) - bessel_k(1, 2.0))
        assert mellin_kernel_F(1, 1.0) == pytest.approx(expected, rel=1e-12)

    def test_m1_sign_change_bracket(self):
        assert mellin_kernel_F(1, 0.5) < 0
        assert mellin_kernel_F(1, 4.0) > 0
        # bisect the crossing where sqrt(x) K_0 = K_1
        lo, hi = 0.5, 4.0
        for _ in range(40):
            mid = 0.5 * (lo + hi)
            if mellin_kernel_F(1, mid) < 0:
                lo = mid
            else:
                hi = mid
        x = 0.5 * (lo + hi)
        s = math.sqrt(x)
        assert s * bessel_k(0, 2 * s) == pytest.approx(bessel_k(1, 2 * s), rel=1e-6)

    def test_decay_at_large_argument(self):
        # bounded by the exp(-2 sqrt x) scale
        assert 0 < mellin_kernel_F(0, 100.0) < 100.0 * math.exp(-2 * 10.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            mellin_kernel_F(0, 0.0)


class TestGMellin:
    def test_agreement_grid(self):
        for m in (0, 1, 2):
            for z in (0.1, 0.25, 0.5, 0.75):
                got = g_mellin(m, z)
                ref = g_closed(m, z)
                assert abs(got - ref) <= 1e-5 * abs(ref), (m, z)

    def test_m3_against_series(self):
        got = g_mellin(3, 0.5)
        ref = sum_g(3, 0.5, 1e-12).value
        assert got == pytest.approx(ref, rel=1e-5)

    def test_tiny_argument_cancellation(self):
        # exercises the sinh(2 u sqrt z)/sqrt z handling as z -> 0
        got = g_mellin(0, 1e-4)
        ref = sum_g(0, 1e-4, 1e-14).value
        assert got == pytest.approx(ref, rel=1e-9)

    def test_refuses_near_unit_argument(self):
        with pytest.raises(DomainError):
            g_mellin(0, 0.95)

    def test_refuses_nonpositive(self):
        with pytest.raises(DomainError):
            g_mellin(0, 0.0)
        with pytest.raises(DomainError):
            g_mellin(0, -0.25)

    def test_explicit_cutoff_is_honored(self):
        # a deliberately short cutoff must trip the refinement guard
        cfg = ImproperIntegralConfig(upper_cutoff=3.0)
        with pytest.raises(NotConvergedError):
            g_mellin(0, 0.75, cfg)

    def test_stirling_coefficients_match_validated_table(self):
        # the route uses exact.stirling2, the same table mellin_lemma_check
        # validates; spot-check the m=2 coefficient pattern 1, -3, +1
        from catseries.exact import stirling2

        assert [stirling2(3, 3 - j) for j in range(3)] == [1, 3, 1]


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            ImproperIntegralConfig(upper_cutoff=-1.0)
        with pytest.raises(ValueError):
            ImproperIntegralConfig(order=1)
        assert DEFAULT_CONFIG.order >= 2

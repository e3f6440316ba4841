import math

import pytest

from catseries.analytic import (
    f_closed,
    g_closed,
    g_transformed,
    g_trig,
    integrated_closed,
    kernel_A,
    sprugnoli_closed,
)
from catseries.closedform import f_special_values, g_special_values
from catseries.errors import DomainError
from catseries.series import sum_f, sum_integrated


class TestKernel:
    def test_limit_at_zero(self):
        assert kernel_A(0.0) == 1.0

    def test_arctan_branch(self):
        assert kernel_A(1.0) == pytest.approx(math.pi / 4, abs=1e-16)

    def test_artanh_branch_against_log_oracle(self):
        # artanh(x)/x = ln((1+x)/(1-x)) / (2x) at x = sqrt(0.5)
        x = math.sqrt(0.5)
        expected = math.log((1 + x) / (1 - x)) / (2 * x)
        assert kernel_A(-0.5) == pytest.approx(expected, rel=1e-15)

    def test_continuity_across_zero(self):
        assert abs(kernel_A(1e-8) - kernel_A(-1e-8)) < 1e-7

    def test_series_branch_consistent_with_direct(self):
        # values straddling the series cutoff must agree
        for t in (9.9e-5, 1.01e-4, -9.9e-5, -1.01e-4):
            s = math.sqrt(abs(t))
            direct = (math.atan(s) if t > 0 else math.atanh(s)) / s
            assert kernel_A(t) == pytest.approx(direct, rel=1e-13)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            kernel_A(-1.0)

    def test_derivative_identity(self):
        # d/dz A(z/(1-z)) = 1/(2z) - A/(2z(1-z)), checked by central differences
        h = 1e-6
        for k in range(20):
            z = 0.05 + (0.9 - 0.05) * (k + 0.5) / 20
            fd = (kernel_A((z + h) / (1 - z - h)) - kernel_A((z - h) / (1 - z + h))) / (2 * h)
            an = 1 / (2 * z) - kernel_A(z / (1 - z)) / (2 * z * (1 - z))
            assert fd == pytest.approx(an, rel=1e-6)


class TestGClosed:
    def test_special_values_table(self):
        for (m, z), cv in g_special_values().items():
            assert g_closed(m, float(z)) == pytest.approx(cv.value(), abs=1e-12)

    def test_known_negative_argument_formulas(self):
        sqrt5 = math.sqrt(5)
        alpha = (1 + sqrt5) / 2
        assert g_closed(1, -0.25) == pytest.approx(
            2 / 25 * (1 - 16 / sqrt5 * math.log(alpha)), abs=1e-14
        )
        assert g_closed(1, -0.5) == pytest.approx(
            math.sqrt(3) / 9 * math.log(2 - math.sqrt(3)), abs=1e-14
        )
        assert g_closed(1, -0.75) == pytest.approx(
            -2 / 49 * (1 - 16 / math.sqrt(21) * math.log((5 - math.sqrt(21)) / 2)),
            abs=1e-14,
        )

    def test_value_at_zero(self):
        assert g_closed(0, 0.0) == 1.0
        for m in range(1, 7):
            assert g_closed(m, 0.0) == pytest.approx(0.0, abs=1e-15)

    def test_domain_errors(self):
        for z in (1.0, -1.0, 1.5):
            with pytest.raises(DomainError):
                g_closed(0, z)


class TestGTrig:
    def test_specials(self):
        assert g_trig(0, math.pi / 4) == pytest.approx(1 + math.pi / 2, rel=1e-14)
        assert g_trig(0, math.pi / 6) == pytest.approx(
            2 / 3 + 4 * math.sqrt(3) * math.pi / 27, rel=1e-14
        )
        assert g_trig(1, math.pi / 3) == pytest.approx(
            10 + 32 * math.pi / (3 * math.sqrt(3)), rel=1e-14
        )

    def test_matches_closed_form_on_grid(self):
        for variant in (0, 1):
            for k in range(50):
                w = -1.45 + 2.9 * (k + 0.5) / 50
                z = math.sin(w) ** 2
                assert g_trig(variant, w) == pytest.approx(
                    g_closed(variant, z), rel=1e-12
                )

    def test_zero_limit(self):
        assert g_trig(0, 0.0) == 1.0
        assert g_trig(1, 0.0) == 0.0

    def test_domain_error(self):
        with pytest.raises(DomainError):
            g_trig(0, math.pi / 2)


class TestFClosed:
    def test_specials(self):
        fv = f_special_values()
        assert f_closed(2.0) == pytest.approx(fv[2].value(), abs=1e-12)
        assert f_closed(3.0) == pytest.approx(fv[3].value(), abs=1e-12)
        assert f_closed(0.0) == 1.0

    def test_against_series(self):
        for z in (0.0, 1.0, 2.0, 3.0):
            assert f_closed(z) == pytest.approx(
                sum_f(z, 1e-12).value, abs=1e-9
            )

    def test_negative_and_large_rejected(self):
        with pytest.raises(DomainError):
            f_closed(-0.5)
        with pytest.raises(DomainError):
            f_closed(4.0)


class TestSprugnoli:
    def test_values(self):
        assert sprugnoli_closed(0.5) == pytest.approx(math.pi / 4, abs=1e-15)
        assert sprugnoli_closed(0.0) == 0.0
        assert sprugnoli_closed(0.25) == pytest.approx(
            math.pi / (6 * math.sqrt(3)), abs=1e-15
        )

    def test_negative_branch(self):
        # t A(t) with t < 0 is -sqrt(-t) artanh(sqrt(-t))
        z = -0.25
        t = z / (1 - z)
        s = math.sqrt(-t)
        assert sprugnoli_closed(z) == pytest.approx(-s * math.atanh(s), rel=1e-15)


class TestTransformed:
    def test_single_term(self):
        assert g_transformed(0, 0.0, 1) == 1.0

    def test_converges_to_closed_form(self):
        assert g_transformed(0, 0.25, 200) == pytest.approx(
            g_closed(0, 0.25), abs=1e-10
        )
        assert g_transformed(1, 1 / 3, 400) == pytest.approx(
            g_closed(1, 1 / 3), abs=1e-8
        )

    def test_domain_error_beyond_half(self):
        with pytest.raises(DomainError):
            g_transformed(0, 0.5, 10)


class TestIntegratedClosed:
    def test_special_value(self):
        assert integrated_closed(0.5) == pytest.approx(
            math.pi**2 / 8 - math.pi / 2 + 1, abs=1e-14
        )

    def test_zero(self):
        assert integrated_closed(0.0) == 0.5

    def test_against_series_both_signs(self):
        for z in (0.25, -0.25, 0.9, -0.9):
            assert integrated_closed(z) == pytest.approx(
                sum_integrated(z, 1e-12).value, abs=1e-10
            )

    def test_small_z_branch_continuity(self):
        # straddle the series/closed switch at |z| = 1e-3
        for z in (9.9e-4, 1.01e-3, -9.9e-4, -1.01e-3):
            assert integrated_closed(z) == pytest.approx(
                sum_integrated(z, 1e-16).value, rel=1e-12
            )

    def test_domain_error(self):
        with pytest.raises(DomainError):
            integrated_closed(1.0)

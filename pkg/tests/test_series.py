import math
from fractions import Fraction

import pytest

from catseries.analytic import integrated_closed
from catseries.errors import DomainError
from catseries.series import (
    WeightSpec,
    exact_partial,
    partial_value,
    sum_f,
    sum_g,
    sum_integrated,
    sum_sprugnoli,
    sum_weighted,
)

F = Fraction


class TestSumG:
    def test_special_value_half(self):
        res = sum_g(0, 0.5, 1e-12)
        assert res.converged
        assert res.value == pytest.approx(1 + math.pi / 2, abs=1e-11)

    def test_weighted_zero_argument(self):
        res = sum_g(1, 0.0, 1e-12)
        assert res.value == 0.0

    def test_m2_three_quarters(self):
        res = sum_g(2, 0.75, 1e-12)
        assert res.value == pytest.approx(
            82 + 272 * math.sqrt(3) * math.pi / 9, abs=1e-10
        )

    def test_not_converged_flag(self):
        res = sum_g(0, 0.9, 1e-12, max_terms=16)
        assert not res.converged
        assert res.terms_used == 16

    def test_domain_error(self):
        with pytest.raises(DomainError):
            sum_g(0, 1.0, 1e-10)

    def test_monotone_partial_sums_for_positive_terms(self):
        prev = -math.inf
        for n in range(0, 60, 5):
            cur = partial_value(WeightSpec("power", m=1, z=0.6), n)
            assert cur >= prev
            prev = cur


class TestSumF:
    def test_special_z2(self):
        res = sum_f(2.0, 1e-12)
        assert res.value == pytest.approx(5 + 3 * math.pi / 2, abs=1e-11)

    def test_z0(self):
        assert sum_f(0.0, 1e-12).value == 1.0

    def test_z1_against_closed_form(self):
        # f(1) = 2 + 4 sqrt3 pi / 27 from the closed form
        assert sum_f(1.0, 1e-12).value == pytest.approx(
            2 + 4 * math.sqrt(3) * math.pi / 27, abs=1e-11
        )

    def test_domain(self):
        with pytest.raises(DomainError):
            sum_f(4.0, 1e-10)


class TestExactPartial:
    def test_first_term_only(self):
        assert exact_partial(WeightSpec("plain", z=F(1, 2)), 0) == 1

    def test_three_terms_by_hand(self):
        # 1 + 2/3 + 2/5 = 31/15
        assert exact_partial(WeightSpec("plain", z=F(1, 2)), 2) == F(31, 15)

    def test_f_reciprocals(self):
        # 1 + 1 + 1/2 + 1/5 = 27/10
        assert exact_partial(WeightSpec("f", z=F(1)), 3) == F(27, 10)

    def test_float_partial_agrees_with_exact(self):
        for spec in (
            WeightSpec("plain", z=0.5),
            WeightSpec("power", m=2, z=-0.75),
            WeightSpec("f", z=3.0),
            WeightSpec("integrated", z=0.25),
            WeightSpec("sprugnoli", z=-0.45),
        ):
            ev = float(exact_partial(spec, 50))
            fv = partial_value(spec, 50)
            assert fv == pytest.approx(ev, rel=1e-12)


class TestWeighted:
    def test_theorem1_mode_value(self):
        # printed: 2/5 + 4 (7 alpha - 6) pi omega / 125  (n=0 term vanishes at s=0)
        sqrt5 = math.sqrt(5)
        alpha = (1 + sqrt5) / 2
        omega = math.sqrt(sqrt5 * alpha)
        res = sum_weighted(WeightSpec("fib", m=0, s=0), 1e-11)
        assert res.converged
        assert res.value == pytest.approx(
            2 / 5 + 4 * (7 * alpha - 6) * math.pi * omega / 125, abs=1e-10
        )

    def test_lucas_weighted_value(self):
        sqrt5 = math.sqrt(5)
        omega = math.sqrt(sqrt5 * (1 + sqrt5) / 2)
        # printed n>=1 value is 1 + 8 sqrt5 pi omega / 25; n=0 adds L_1 = 1
        res = sum_weighted(WeightSpec("luc", m=0, s=1), 1e-11)
        assert res.value == pytest.approx(2 + 8 * sqrt5 * math.pi * omega / 25, abs=1e-10)

    def test_binet_split_matches_exact_partial(self):
        for r in (2, 4):
            for s in range(-2, 3):
                spec = WeightSpec("fib", m=1, r=r, s=s, lucas_scaled=True)
                assert partial_value(spec, 50) == pytest.approx(
                    float(exact_partial(spec, 50)), rel=1e-11
                )
                spec = WeightSpec("luc", m=1, r=r, s=s, lucas_scaled=True)
                assert partial_value(spec, 50) == pytest.approx(
                    float(exact_partial(spec, 50)), rel=1e-11
                )

    def test_odd_r_rejected_in_scaled_mode(self):
        with pytest.raises(DomainError):
            sum_weighted(WeightSpec("fib", m=1, r=3, s=0, lucas_scaled=True), 1e-10)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            sum_weighted(WeightSpec("nope", z=0.5), 1e-10)


class TestTailBounds:
    def test_soundness_on_grid(self):
        # doubling the summed terms must move the value by less than the bound
        for m in range(7):
            for z in (0.1, -0.1, 0.5, -0.5, 0.9):
                res = sum_g(m, z, 1e-10)
                assert res.converged
                doubled = partial_value(
                    WeightSpec("power", m=m, z=z), 2 * res.terms_used - 1
                )
                assert abs(doubled - res.value) <= res.tail_bound + 1e-18

    def test_soundness_for_integrated_and_sprugnoli(self):
        for z in (0.5, -0.5, 0.9):
            res = sum_integrated(z, 1e-10)
            doubled = partial_value(WeightSpec("integrated", z=z), 2 * res.terms_used - 1)
            assert abs(doubled - res.value) <= res.tail_bound + 1e-18
            res = sum_sprugnoli(z, 1e-10)
            doubled = partial_value(WeightSpec("sprugnoli", z=z), 2 * res.terms_used - 1)
            assert abs(doubled - res.value) <= res.tail_bound + 1e-18

    def test_tail_bound_meets_requested_tolerance(self):
        for tol in (1e-6, 1e-9, 1e-12):
            res = sum_g(3, -0.8, tol)
            assert res.converged and res.tail_bound <= tol


class TestIntegratedSeries:
    def test_special_value(self):
        res = sum_integrated(0.5, 1e-12)
        assert res.value == pytest.approx(math.pi**2 / 8 - math.pi / 2 + 1, abs=1e-11)

    def test_zero(self):
        assert sum_integrated(0.0, 1e-12).value == 0.5

    def test_matches_closed_form_negative(self):
        res = sum_integrated(-0.25, 1e-10)
        assert res.value == pytest.approx(integrated_closed(-0.25), abs=1e-10)


class TestSprugnoliSeries:
    def test_against_closed(self):
        from catseries.analytic import sprugnoli_closed

        for z in (-0.45, -0.25, 0.25, 0.5, 0.75):
            res = sum_sprugnoli(z, 1e-12)
            assert res.value == pytest.approx(sprugnoli_closed(z), abs=1e-11)

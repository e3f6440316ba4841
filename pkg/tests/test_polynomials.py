from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catseries.analytic import g_closed, kernel_A
from catseries.polynomials import (
    RationalPolynomial,
    p_pair_closed,
    p_pair_recursive,
    q_kernel,
    q_kernel_closed,
)

F = Fraction

PRINTED_P11 = RationalPolynomial([F(1, 4), F(1, 2)])  # (2z+1)/4
PRINTED_P21 = RationalPolynomial([F(-1, 4), F(1)])  # (4z-1)/4
PRINTED_P12 = RationalPolynomial([F(-1, 8), F(3, 2), F(1, 2)])  # (4z^2+12z-1)/8
PRINTED_P22 = RationalPolynomial([F(1, 8), F(-1, 4), F(2)])  # (16z^2-2z+1)/8


class TestRationalPolynomial:
    def test_normalization_strips_trailing_zeros(self):
        p = RationalPolynomial([1, 2, 0, 0])
        assert p.degree == 1
        assert RationalPolynomial([0, 0]).is_zero()

    def test_eval_examples(self):
        assert PRINTED_P11(0) == F(1, 4)
        assert PRINTED_P22(F(1, 2)) == F(1, 2)  # (16/4 - 1 + 1)/8
        assert RationalPolynomial([])(F(3, 7)) == 0

    def test_derivative_examples(self):
        assert RationalPolynomial([F(1, 2)]).derivative().is_zero()
        assert PRINTED_P11.derivative() == RationalPolynomial([F(1, 2)])
        assert PRINTED_P12.derivative() == RationalPolynomial([F(3, 2), F(1)])  # z + 3/2

    @given(
        st.lists(st.integers(-9, 9), max_size=5),
        st.lists(st.integers(-9, 9), max_size=5),
        st.integers(-5, 5),
    )
    def test_ring_operations_agree_with_pointwise(self, a, b, x):
        pa, pb = RationalPolynomial(a), RationalPolynomial(b)
        assert (pa + pb)(x) == pa(x) + pb(x)
        assert (pa * pb)(x) == pa(x) * pb(x)
        assert (pa - pb)(x) == pa(x) - pb(x)


class TestPolyPairs:
    def test_base_case(self):
        pair = p_pair_recursive(0)
        assert pair.p1 == RationalPolynomial([F(1, 2)])
        assert pair.p2 == RationalPolynomial([F(1, 2)])
        assert p_pair_closed(0).p1 == pair.p1

    def test_printed_m1_m2(self):
        assert p_pair_recursive(1).p1 == PRINTED_P11
        assert p_pair_recursive(1).p2 == PRINTED_P21
        assert p_pair_recursive(2).p1 == PRINTED_P12
        assert p_pair_recursive(2).p2 == PRINTED_P22
        assert p_pair_closed(1).p1 == PRINTED_P11
        assert p_pair_closed(2).p2 == PRINTED_P22

    def test_recursive_equals_closed_m10(self):
        for m in range(11):
            rec, clo = p_pair_recursive(m), p_pair_closed(m)
            assert rec.p1 == clo.p1, m
            assert rec.p2 == clo.p2, m

    def test_degrees_and_leading_coefficients(self):
        # The recursions force lead(P1_m) = 1/2 and lead(P2_m) = 2^(m-1):
        # in P1 the z(1-z) d/dz and m*z terms contribute -(m-1)c and m*c to
        # the top coefficient, in P2 they contribute -(m-1)c and (m+1)c.
        for m in range(1, 11):
            pair = p_pair_recursive(m)
            assert pair.p1.degree == m and pair.p2.degree == m
            assert pair.p1.coefficients[-1] == F(1, 2)
            assert pair.p2.coefficients[-1] == 2 ** (m - 1)

    def test_negative_m_rejected(self):
        with pytest.raises(ValueError):
            p_pair_recursive(-1)


class TestQKernel:
    def test_small_kernels(self):
        assert q_kernel(0) == RationalPolynomial([F(1, 2)])
        assert q_kernel(1) == RationalPolynomial([0, 1])  # u
        assert q_kernel(2) == RationalPolynomial([0, 1, 2])  # u + 2u^2

    def test_recursive_equals_closed_m10(self):
        for m in range(11):
            assert q_kernel(m) == q_kernel_closed(m), m

    def test_vanishing_and_leading(self):
        # lead(Q_m) = 2^(m-1): the recursion gives (m+1)c - (m-1)c = 2c.
        for m in range(1, 11):
            q = q_kernel(m)
            assert q.degree == m
            assert q(0) == 0
            assert q.coefficients[-1] == 2 ** (m - 1)


class TestClosedFormAssembly:
    def test_float_eval_matches_exact_assembly(self):
        # semi-exact route: P parts assembled in rational arithmetic, only
        # the kernel and the final combination in floats
        zs = [F(k, 21) for k in range(-20, 21, 2) if k != 0]
        for m in range(7):
            pair = p_pair_recursive(m)
            for zq in zs:
                z = float(zq)
                a = pair.p1(zq) / (1 - zq) ** (m + 1)
                b = pair.p2(zq) / (1 - zq) ** (m + 2)
                exact_assembly = float(a) + float(b) * kernel_A(z / (1.0 - z))
                got = g_closed(m, z)
                assert got == pytest.approx(exact_assembly, rel=1e-13)

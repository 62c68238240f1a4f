"""Exercises the rational-function tower: integer-coefficient polynomial
arithmetic, normalized quotients, and evaluation at rational points."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qortho import _intkernel
from qortho.exactalg import (
    PoleError,
    QPolynomial,
    QRational,
    rational_from_str,
    rational_to_str,
)


def qp(*coeffs):
    return QPolynomial(coeffs)


ONE = QPolynomial.one()
Q = QPolynomial.variable()


class TestQPolynomial:
    def test_sum_collapses_to_constant(self):
        assert qp(1, 1) + qp(1, -1) == qp(2)

    def test_product_expands(self):
        assert qp(1, 1) * qp(1, 0, 1) == qp(1, 1, 1, 1)

    def test_subtraction_cancels_to_zero(self):
        assert (qp(-1, 1) + qp(1, -1)).is_zero

    def test_fraction_coefficients_share_a_denominator(self):
        p = QPolynomial([Fraction(1, 2), Fraction(1, 3)])
        assert p.coefficients == (Fraction(1, 2), Fraction(1, 3))
        nums, den = p.int_parts()
        assert nums == [3, 2] and den == 6

    def test_degree_and_leading_coefficient(self):
        p = qp(5, 0, 7)
        assert p.degree == 2
        assert p.leading_coefficient == 7
        assert QPolynomial.zero().degree == -1

    def test_power_matches_repeated_product(self):
        base = qp(1, 1)
        assert base**3 == base * base * base
        assert base**0 == ONE

    def test_monomial_and_constant_builders(self):
        assert QPolynomial.monomial(3, 2) == qp(0, 0, 0, 2)
        assert QPolynomial.constant(Fraction(2, 3)) == QPolynomial([Fraction(2, 3)])

    def test_evaluate_at_one_sums_coefficients(self):
        assert qp(1, 1, 1).evaluate(1) == 3
        assert qp(1, 1, 1).evaluate(Fraction(1, 2)) == Fraction(7, 4)

    def test_divexact_recovers_factor(self):
        f = qp(1, 2, 1)
        g = qp(1, 1)
        assert f.divexact(g) == g

    def test_divexact_rejects_inexact_division(self):
        with pytest.raises(ValueError):
            qp(1, 0, 1).divexact(qp(1, 1))

    def test_inflate_substitutes_a_power_of_q(self):
        assert qp(1, 1, 1).inflate(2) == qp(1, 0, 1, 0, 1)

    def test_json_round_trip(self):
        p = QPolynomial([Fraction(-3, 4), 0, Fraction(5, 2)])
        assert QPolynomial.from_json(p.to_json()) == p

    def test_str_rendering(self):
        assert str(qp(1, 1, 2)) == "1 + q + 2q^2"
        assert str(QPolynomial.zero()) == "0"


class TestQRational:
    def test_common_factor_cancels_to_polynomial(self):
        r = QRational.of(qp(-1, 0, 1), qp(-1, 1))
        assert r == QRational.of(qp(1, 1))
        assert r.is_polynomial

    def test_integer_content_cancels(self):
        assert QRational.of(qp(0, 2), qp(2)) == QRational.of(Q)

    def test_denominator_is_kept_monic(self):
        r = QRational.of(qp(-1, 1), qp(1, -1))
        assert r == QRational.of(qp(-1))
        s = QRational.of(ONE, qp(2, 2))
        assert s.denominator.leading_coefficient == 1

    def test_eval_at_point(self):
        assert QRational.of(qp(-1, 0, 1), qp(-1, 1)).eval_at(1) == 2
        assert QRational.of(qp(1, 1), qp(1, 0, 1)).eval_at(Fraction(1, 2)) == Fraction(6, 5)

    def test_eval_at_pole_raises(self):
        r = QRational.of(ONE, qp(-1, 1))
        with pytest.raises(PoleError):
            r.eval_at(1)

    def test_division_by_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            QRational.of(ONE) / QRational.zero()

    def test_arithmetic_over_a_common_denominator(self):
        a = QRational.of(ONE, qp(1, 1))
        b = QRational.of(Q, qp(1, 1))
        assert a + b == QRational.one()
        assert a - a == QRational.zero()
        assert (a * b).denominator == qp(1, 2, 1)

    def test_power_and_reciprocal(self):
        r = QRational.of(Q, qp(1, 1))
        assert r**2 == r * r
        assert 1 / r == QRational.of(qp(1, 1), Q)

    def test_reciprocal_substitution(self):
        # f(1/q) for f = q/(1+q) is (1/q)/(1+1/q) = 1/(1+q)
        r = QRational.of(Q, qp(1, 1))
        assert r.substitute_q_reciprocal() == QRational.of(ONE, qp(1, 1))

    def test_json_round_trip(self):
        r = QRational.of(qp(1, -2, 5), qp(3, 0, 1))
        assert QRational.from_json(r.to_json()) == r


def test_rational_string_helpers_round_trip():
    for f in (Fraction(3), Fraction(-7, 2), Fraction(0)):
        assert rational_from_str(rational_to_str(f)) == f


# -- randomized algebra laws ----------------------------------------------------

small_fraction = st.fractions(
    min_value=Fraction(-9), max_value=Fraction(9), max_denominator=6
)
polys = st.lists(small_fraction, min_size=0, max_size=5).map(QPolynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero)


@settings(max_examples=120, deadline=None)
@given(polys, polys, polys)
def test_polynomial_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + QPolynomial.zero() == a
    assert a * ONE == a


@settings(max_examples=120, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_quotient_normalization_is_idempotent(num, den):
    r = QRational.of(num, den)
    again = QRational.of(r.numerator, r.denominator)
    assert again.numerator == r.numerator
    assert again.denominator == r.denominator
    assert r.denominator.leading_coefficient == 1
    # the reduced pair still represents num/den
    assert r.numerator * den == num * r.denominator


@settings(max_examples=100, deadline=None)
@given(polys, polys, st.fractions(min_value=Fraction(-3), max_value=Fraction(3), max_denominator=4))
def test_evaluation_is_a_ring_homomorphism(a, b, point):
    assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
    assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)


@settings(max_examples=100, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_product_with_divexact_round_trips(a, b):
    assert (a * b).divexact(b) == a


# -- the dense integer kernel ----------------------------------------------------

int_coeffs = st.lists(st.integers(min_value=-(10**6), max_value=10**6), max_size=8)


@settings(max_examples=150, deadline=None)
@given(int_coeffs)
def test_kernel_pack_unpack_round_trip(cs):
    bound = max((abs(c) for c in cs), default=0)
    w = _intkernel._width_for(bound)
    assert _intkernel.unpack(_intkernel.pack(cs, w), w) == _intkernel.strip(cs)


long_int_coeffs = st.lists(
    st.integers(min_value=-(10**6), max_value=10**6), min_size=25, max_size=40
)


@settings(max_examples=40, deadline=None)
@given(long_int_coeffs, long_int_coeffs)
def test_kernel_multiplication_matches_schoolbook(a, b):
    # inputs are long enough that mul takes the packed-integer route
    assert _intkernel.mul(a, b) == _intkernel.strip(_intkernel._mul_schoolbook(a, b))


@settings(max_examples=80, deadline=None)
@given(int_coeffs, int_coeffs)
def test_kernel_gcd_divides_both_inputs(a, b):
    g = _intkernel.gcd(a, b)
    if g:
        for f in (a, b):
            if _intkernel.strip(list(f)):
                _intkernel.divexact(_intkernel.strip(list(f)), g)

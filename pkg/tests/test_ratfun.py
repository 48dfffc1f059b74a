from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ivrf.errors import StructuralError
from ivrf.fields import QQ
from ivrf.ff import FiniteField
from ivrf.ratfun import (POLE, Polynomial, RationalFunction, evaluate,
                         identity_check, normalize, parse_ratfun)


def qpoly(*cs):
    return Polynomial(QQ, [Fraction(c) for c in cs])


x = RationalFunction.gen(QQ)

small_fraction = st.fractions(min_value=-9, max_value=9, max_denominator=6)
coeff_lists = st.lists(small_fraction, min_size=1, max_size=5)


class TestNormalize:
    def test_common_factor(self):
        r = normalize(qpoly(-1, 0, 1), qpoly(-1, 1))  # (x^2-1)/(x-1)
        assert r == x + 1

    def test_unit_content(self):
        assert normalize(qpoly(0, 2), qpoly(2)) == x

    def test_gf2_example(self):
        F2 = FiniteField(2)
        P = lambda *cs: Polynomial(F2, [F2.from_int(c) for c in cs])
        r = RationalFunction(P(0, 1, 0, 0, 1), P(0, 1, 1))  # (x^4+x)/(x^2+x)
        assert r.num == P(1, 1, 1) and r.den == P(1)

    def test_idempotent(self):
        r = normalize(qpoly(0, 6, 6), qpoly(0, 0, 3))
        again = normalize(r.num, r.den)
        assert r == again

    def test_zero_denominator(self):
        with pytest.raises(StructuralError):
            normalize(qpoly(1), qpoly())

    def test_denominator_monic(self):
        r = normalize(qpoly(1), qpoly(2, 4))
        assert r.den.leading() == Fraction(1)


class TestEvaluate:
    def test_square(self):
        assert evaluate(x ** 2, Fraction(3)) == 9

    def test_pole(self):
        assert evaluate(1 / x, Fraction(0)) is POLE

    def test_theta_at_one(self):
        theta = (6 * (1 + x ** 4)) / ((1 + 6 * x ** 2) * (6 + x ** 2))
        assert evaluate(theta, Fraction(1)) == Fraction(12, 49)


class TestArith:
    def test_add(self):
        assert x + 1 / x == (x ** 2 + 1) / x

    def test_compose_poly(self):
        assert (x ** 2).compose(x + 1) == x ** 2 + 2 * x + 1

    def test_compose_theta_constant(self):
        theta = (6 * (1 + x ** 4)) / ((1 + 6 * x ** 2) * (6 + x ** 2))
        c = theta.compose(RationalFunction.constant(QQ, Fraction(2, 3)))
        assert c.is_constant()
        assert c.as_constant() == Fraction(97, 319)
        assert c.as_constant() == theta.evaluate(Fraction(2, 3))

    def test_compose_constant_pole(self):
        phi = 1 / (x - 1)
        with pytest.raises(StructuralError):
            phi.compose(RationalFunction.constant(QQ, Fraction(1)))

    def test_power_negative(self):
        assert (x ** -2) * x ** 2 == RationalFunction.one(QQ)


class TestIdentity:
    def test_psi_identity(self):
        psi = x ** 2 / (x ** 4 + 6)
        assert identity_check(x ** 2 * (1 - x ** 2 * psi), 6 * psi)

    def test_theta_symmetry(self):
        theta = (6 * (1 + x ** 4)) / ((1 + 6 * x ** 2) * (6 + x ** 2))
        assert identity_check(theta.compose(1 / x), theta)

    def test_distinct(self):
        assert not identity_check(x, x + 1)


class TestParse:
    def test_padic_style(self):
        from ivrf.fields import PAdicQ
        V = PAdicQ(5)
        phi = parse_ratfun(V, "(x^5 - x)/5")
        assert phi.evaluate(Fraction(2)) == 6

    def test_implicit_multiplication(self):
        from ivrf.fields import PAdicQ
        V = PAdicQ(2)
        phi = parse_ratfun(V, "6(1+x^4)/((1+6x^2)(6+x^2))")
        assert phi.evaluate(Fraction(1)) == Fraction(12, 49)


@given(coeff_lists, coeff_lists)
@settings(max_examples=60)
def test_normalize_idempotent(nc, dc):
    num, den = Polynomial(QQ, nc), Polynomial(QQ, dc)
    if den.is_zero():
        return
    r = RationalFunction(num, den)
    assert RationalFunction(r.num, r.den) == r


@given(coeff_lists, coeff_lists, small_fraction)
@settings(max_examples=60)
def test_evaluate_commutes_with_mul(nc, dc, a):
    f, g = Polynomial(QQ, nc), Polynomial(QQ, dc)
    if g.is_zero():
        return
    phi = RationalFunction(f)
    psi = RationalFunction(g)
    prod = phi * psi
    va = prod.evaluate(a)
    assert va == phi.evaluate(a) * psi.evaluate(a)


@given(coeff_lists, coeff_lists)
@settings(max_examples=40)
def test_identity_implies_pointwise_agreement(nc, dc):
    f, g = Polynomial(QQ, nc), Polynomial(QQ, dc)
    if g.is_zero():
        return
    phi = RationalFunction(f, g)
    psi = RationalFunction(f.scale(Fraction(3)), g.scale(Fraction(3)))
    assert identity_check(phi, psi)
    for k in range(20):
        a = Fraction(k - 10, 3)
        assert phi.evaluate(a) == psi.evaluate(a)


def test_divmod_reconstruction():
    f = qpoly(1, 2, 0, 5)
    g = qpoly(3, 1)
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_gcd_monic_and_divides():
    f = qpoly(-1, 0, 1) * qpoly(2, 1)
    g = qpoly(-1, 1) * qpoly(2, 1)
    d = Polynomial.gcd(f, g)
    assert d.leading() == 1
    assert (f % d).is_zero() and (g % d).is_zero()

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from compenum.polyring import (
    ONE,
    IntPolynomial,
    RationalGF,
    divmod_fractions,
    poly_gcd,
)

coeff_lists = st.lists(st.integers(-9, 9), min_size=0, max_size=9)


def poly(*cs):
    return IntPolynomial(tuple(cs))


def test_display_ascending_with_signs():
    assert str(poly(1, 0, -1, -2)) == "1 - x^2 - 2*x^3"
    assert str(poly(0, 1)) == "x"
    assert str(poly()) == "0"
    assert str(poly(-3, 2)) == "-3 + 2*x"


def test_trailing_zeros_trimmed_and_degree():
    p = poly(1, 2, 0, 0)
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert poly().degree == -1


def test_arithmetic_and_evaluation():
    a = poly(1, 2)
    b = poly(0, 1, 1)
    assert (a + b).coeffs == (1, 3, 1)
    assert (a - b).coeffs == (1, 1, -1)
    assert (a * b).coeffs == (0, 1, 3, 2)
    assert (-a).coeffs == (-1, -2)
    assert b(3) == 12 and a(0) == 1


def test_monomial_and_derivative():
    assert IntPolynomial.monomial(3, -2).coeffs == (0, 0, 0, -2)
    assert poly(1, 0, -1, -2).derivative().coeffs == (0, -2, -6)


def test_gcd_pulls_out_common_factor():
    g = poly_gcd(poly(1, 0, -1), poly(1, -1))
    # primitive gcd is 1 - x up to sign
    assert g.coeffs in ((1, -1), (-1, 1))


def test_divmod_fractions():
    q, r = divmod_fractions(poly(0, 0, 1), poly(1, 1))
    assert q == (Fraction(-1), Fraction(1))
    assert r == (Fraction(1),)


def test_gf_requires_unit_constant():
    with pytest.raises(ValueError):
        RationalGF(ONE, poly(0, 1))


def test_gf_reduce_and_equality():
    gf = RationalGF(poly(1, 1), poly(1, 0, -1))
    red = gf.reduce()
    assert str(red) == "(1) / (1 - x)"
    assert gf == RationalGF(ONE, poly(1, -1))
    assert gf.series(5) == (1, 1, 1, 1, 1, 1)


def test_gf_series_geometric():
    gf = RationalGF(ONE, poly(1, -2))
    assert gf.series(6) == (1, 2, 4, 8, 16, 32, 64)


@given(coeff_lists, coeff_lists)
def test_mul_commutes(a, b):
    pa, pb = IntPolynomial(tuple(a)), IntPolynomial(tuple(b))
    assert (pa * pb).coeffs == (pb * pa).coeffs


@given(coeff_lists, coeff_lists, coeff_lists)
def test_mul_associates_and_distributes(a, b, c):
    pa, pb, pc = (IntPolynomial(tuple(t)) for t in (a, b, c))
    assert ((pa * pb) * pc).coeffs == (pa * (pb * pc)).coeffs
    assert (pa * (pb + pc)).coeffs == (pa * pb + pa * pc).coeffs


@given(coeff_lists, coeff_lists)
def test_reduce_preserves_series(num, den):
    den = [1] + den  # unit constant term
    gf = RationalGF(IntPolynomial(tuple(num)), IntPolynomial(tuple(den)))
    assert gf.reduce().series(25) == gf.series(25)


@given(coeff_lists, st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_exact_division_after_gcd(a, b):
    pa = IntPolynomial(tuple(a))
    pb = IntPolynomial(tuple(b))
    prod = pa * pb
    if pb.degree < 0:
        return
    g = poly_gcd(prod, pb)
    # pb divides the product, so the gcd has at least pb's degree
    assert g.degree >= pb.degree or prod.degree < 0

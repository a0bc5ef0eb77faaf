"""Exact polynomial ring: examples, ring axioms, division properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gkm.errors import NotDivisible, RankMismatch
from gkm.polynomial import Polynomial, Vector, congruent_mod_linear, lin_form


def P(rank, terms):
    return Polynomial(rank, terms)


x1 = Polynomial.variable(2, 0)
x2 = Polynomial.variable(2, 1)


# -- lin_form -----------------------------------------------------------------

def test_lin_form_basis_vector():
    assert lin_form(Vector((1, 0))) == x1


def test_lin_form_zero_vector():
    assert lin_form(Vector((0, 0))) == Polynomial.zero(2)


def test_lin_form_general():
    assert lin_form(Vector((-1, -2))) == -x1 - 2 * x2


# -- multiply -----------------------------------------------------------------

def test_multiply_variables():
    assert x1 * x2 == P(2, {(1, 1): 1})


def test_multiply_difference_of_squares():
    assert (x1 + x2) * (x1 - x2) == x1**2 - x2**2


def test_multiply_scalar():
    assert (2 * x1) * Fraction(1, 2) == x1


def test_multiply_rank_mismatch():
    with pytest.raises(RankMismatch):
        x1 * Polynomial.variable(3, 0)


# -- divide_by_linear ---------------------------------------------------------

def test_divide_difference_of_squares():
    assert (x1**2 - x2**2).divide_by_linear(x1 - x2) == x1 + x2


def test_divide_zero():
    assert Polynomial.zero(2).divide_by_linear(x1) == Polynomial.zero(2)


def test_divide_not_divisible():
    with pytest.raises(NotDivisible):
        x1.divide_by_linear(x2)


def test_divide_rejects_nonlinear_divisor():
    with pytest.raises(ValueError):
        x1.divide_by_linear(x1 * x1)
    with pytest.raises(ValueError):
        x1.divide_by_linear(x1 + 1)


# -- congruent_mod_linear -----------------------------------------------------

def test_congruent_squares():
    assert congruent_mod_linear(x1**2, x2**2, x1 - x2)


def test_congruent_identity():
    f = 3 * x1 * x2 - x2**2 + 7
    assert congruent_mod_linear(f, f, x1 + 5 * x2)


def test_congruent_false():
    assert not congruent_mod_linear(x1, Polynomial.zero(2), x2)


# -- evaluate -------------------------------------------------------------------

def test_evaluate_product_point():
    assert (x1 * x2).evaluate((2, 3)) == 6


def test_evaluate_at_zero_gives_constant_term():
    f = x1**2 + 5 * x2 + Fraction(7, 3)
    assert f.evaluate((0, 0)) == Fraction(7, 3)


def test_evaluate_difference_of_squares_diagonal():
    assert (x1**2 - x2**2).evaluate((1, 1)) == 0


def test_evaluate_rejects_floats():
    with pytest.raises(TypeError):
        x1.evaluate((0.5, 1))


# -- homogeneous_component ------------------------------------------------------

def test_homogeneous_component_degree_one():
    f = x1 + x1 * x2
    assert f.homogeneous_component(1) == x1


def test_homogeneous_component_degree_two():
    f = x1 + x1 * x2
    assert f.homogeneous_component(2) == x1 * x2


def test_homogeneous_component_above_degree():
    f = x1 + x1 * x2
    assert f.homogeneous_component(5) == Polynomial.zero(2)


# -- text form ------------------------------------------------------------------

def test_str_matches_documented_form():
    f = x1**2 - 2 * x1 * x2 + Fraction(1, 3)
    assert str(f) == "x1^2 - 2*x1*x2 + 1/3"


def test_str_zero():
    assert str(Polynomial.zero(2)) == "0"


def test_str_leading_negative_unit():
    assert str(-x1 - 2 * x2) == "-x1 - 2*x2"


# -- property tests -------------------------------------------------------------

coeffs = st.integers(min_value=-4, max_value=4).map(Fraction)
exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exponents, coeffs, max_size=5).map(lambda d: Polynomial(2, d))
vectors2 = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).map(Vector)
nonzero_vectors2 = vectors2.filter(lambda v: not v.is_zero())


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60)
@given(polys, nonzero_vectors2)
def test_divide_after_multiply_roundtrip(q, w):
    ell = lin_form(w)
    assert (q * ell).divide_by_linear(ell) == q


@settings(max_examples=60)
@given(polys, polys, nonzero_vectors2)
def test_congruence_iff_difference_divisible(f, g, w):
    ell = lin_form(w)
    try:
        (f - g).divide_by_linear(ell)
        divisible = True
    except NotDivisible:
        divisible = False
    assert congruent_mod_linear(f, g, ell) == divisible


@settings(max_examples=60)
@given(polys, polys, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_evaluate_is_ring_homomorphism(a, b, pt):
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)

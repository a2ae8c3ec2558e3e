from fractions import Fraction

import pytest
from hypothesis import given

from kpoincare.parser import evaluate, parse, parse_latex
from kpoincare.scalars import ONE, Q, ZERO, GaussianRational, I, NoClassicalLimit, Scalar, T, scalar

from strategies import scalars


def test_imaginary_unit_squares_to_minus_one():
    assert I * I == -ONE


def test_t_is_i_over_kappa():
    assert T == I * Q
    assert T * T == -(Q * Q)


def test_rendering_examples():
    assert str(Scalar.from_gauss(Fraction(3, 2), 0) * I * Q * Q) == "3/2*i*q^2"
    assert (Scalar.from_gauss(Fraction(3, 2)) * I * Q * Q).latex() == "\\frac{3i}{2\\kappa^{2}}"


def test_classical_limit_of_rational_function():
    s = 3 * Q * Q / (1 + Q)
    assert s.classical_limit() == GaussianRational(0, 0)
    assert (1 / (1 + Q)).classical_limit() == GaussianRational(1, 0)


def test_pole_has_no_classical_limit():
    with pytest.raises(NoClassicalLimit):
        (1 / Q).classical_limit()


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    if a:
        assert a * a.inverse() == ONE


@given(scalars())
def test_canonical_form_is_idempotent(a):
    again = Scalar(a.nr, a.ni, a.d)
    assert (again.nr, again.ni, again.d) == (a.nr, a.ni, a.d)


@given(scalars(), scalars())
def test_classical_limit_is_multiplicative(a, b):
    try:
        la, lb = a.classical_limit(), b.classical_limit()
    except NoClassicalLimit:
        return
    assert (a * b).classical_limit() == la * lb


@given(scalars())
def test_text_and_latex_round_trip(a):
    assert evaluate(parse(str(a))) == a
    assert evaluate(parse_latex(a.latex())) == a


def test_coercion_of_small_ints():
    assert scalar(0) == ZERO
    assert scalar(Fraction(1, 2)) + scalar(Fraction(1, 2)) == ONE


def test_scalar_arith():
    from kpoincare.scalars import scalar_arith

    iq = I * Q
    assert scalar_arith(iq, iq, "add") == 2 * iq
    assert scalar_arith(iq, None, "neg") == -iq
    assert scalar_arith(iq, Q, "div") == I
    with pytest.raises(ZeroDivisionError):
        scalar_arith(iq, 0, "div")
    with pytest.raises(ValueError):
        scalar_arith(iq, iq, "pow")

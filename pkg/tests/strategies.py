"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from kpoincare.algebra import minkowski, poincare
from kpoincare.scalars import Q, Scalar

small = st.integers(-6, 6)
rationals = st.builds(Fraction, small, st.integers(1, 5))
gauss = st.tuples(rationals, rationals)


@st.composite
def polys(draw, max_degree=2):
    coeffs = draw(st.lists(gauss, min_size=1, max_size=max_degree + 1))
    out = Scalar.from_gauss(0)
    qk = Scalar.from_gauss(1)
    for re, im in coeffs:
        out = out + Scalar.from_gauss(re, im) * qk
        qk = qk * Q
    return out


@st.composite
def scalars(draw):
    """Rational functions in q with Gaussian-rational coefficients."""
    num = draw(polys())
    if draw(st.booleans()):
        den = draw(polys(1))
        if den:
            return num / den
    return num


def _gens(alg):
    out = [alg.x(m) for m in range(alg.n)]
    if alg.has_lorentz:
        out += [alg.L(a, b) for a in range(alg.n) for b in range(alg.n)]
    return out


@st.composite
def monomials(draw, alg=None, max_degree=3):
    alg = alg or poincare(4)
    gens = _gens(alg)
    idx = draw(st.lists(st.integers(0, len(gens) - 1), max_size=max_degree))
    out = alg.one()
    for k in idx:
        out = out * gens[k]
    return out


@st.composite
def elements(draw, alg=None, max_degree=2, max_terms=3):
    alg = alg or poincare(4)
    terms = draw(st.lists(st.tuples(st.integers(-3, 3), monomials(alg, max_degree)), min_size=1, max_size=max_terms))
    out = alg.zero()
    for c, m in terms:
        out = out + m * c
    return out


def minkowski_elements(n=4, max_degree=3):
    return elements(minkowski(n), max_degree)

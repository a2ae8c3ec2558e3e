import random

import pytest
from hypothesis import given

from kpoincare import calculus as C
from kpoincare.algebra import poincare
from kpoincare.scalars import ONE, T

from strategies import monomials

P = C.calculus_algebra()
GENS = [("x", a) for a in range(4)] + [("L", a, b) for a in range(4) for b in range(4)]


def test_wedge_basis_counts():
    tab = C.wedge_table()
    assert len(C.SYMBOLS) == 15
    assert tab.basis_count == 110
    assert tab.relation_rank == 115


def test_relations_reduce_to_zero_and_are_sigma_fixed():
    tab = C.wedge_table()
    for label, rel in tab.relations:
        assert not tab.reduce_fast(rel), label
        assert C.sigma_scalar(rel) == rel, label


def test_reduction_detects_non_relations():
    tab = C.wedge_table()
    w0 = ("w0",)
    w1 = ("w1", 1)
    assert tab.reduce_fast({(w0, w1): ONE})


def test_sigma_is_not_an_involution():
    rng = random.Random(7)
    moved = 0
    for _ in range(40):
        k = (rng.choice(C.SYMBOLS), rng.choice(C.SYMBOLS))
        if C.sigma_scalar(C.sigma_scalar({k: ONE})) != {k: ONE}:
            moved += 1
    assert moved > 0


@pytest.mark.parametrize("sym", C.SYMBOLS, ids=C.symbol_text)
def test_tabulated_commutators_match_the_derived_route(sym):
    for gen in GENS:
        assert (C.generator_commutator(gen, sym) - C.derived_commutator(gen, sym)).is_zero()


@pytest.mark.parametrize("sym", C.SYMBOLS, ids=C.symbol_text)
def test_cartan_maurer_consistency(sym):
    diff = C.combine((1, C.derived_maurer_cartan_tensor(sym)), (-1, C.maurer_cartan_tensor(sym)))
    assert not C.wedge_table().reduce_fast(diff)


def test_omega_is_closed():
    assert not C.maurer_cartan(("w0",)).terms


def test_d_of_translation_commutator():
    # d is a derivation: d[x^0, x^1] = (i/kappa) d x^1
    lhs = C.d_algebra(P.x(0) * P.x(1) - P.x(1) * P.x(0))
    assert (lhs - C.d_algebra(P.x(1)).scale(T)).is_zero()


def test_d_of_constants_vanishes():
    assert not C.d_algebra(P.one()).terms


@pytest.mark.parametrize("gen", GENS, ids=str)
def test_d_squared_on_generators(gen):
    e = P.x(gen[1]) if gen[0] == "x" else P.L(gen[1], gen[2])
    assert C.d_oneform(C.d_algebra(e)).is_zero()


@given(monomials(P, 3))
def test_d_squared_on_monomials(a):
    assert C.d_oneform(C.d_algebra(a)).is_zero()


@given(monomials(P, 2), monomials(P, 2))
def test_leibniz_rule(a, b):
    assert (C.d_algebra(a * b) - (C.d_algebra(a) * b + a * C.d_algebra(b))).is_zero()


@given(monomials(P, 2), monomials(P, 2))
def test_bimodule_structure_is_consistent(a, b):
    sym = C.SYMBOLS[(len(a.terms) + 3 * len(b.terms)) % 15]
    lhs = C.move_coefficient_left(sym, a * b)
    rhs = C.move_coefficient_left(sym, a).right_multiply(b)
    assert (lhs - rhs).is_zero()


@pytest.mark.parametrize("sym", [("w2", 0, 1), ("w1", 2), ("w2", 1, 3)], ids=C.symbol_text)
def test_left_invariance_of_basis_forms(sym):
    from kpoincare.algebra import TensorElement

    one = TensorElement.pure(P.one(), P.one())
    for k, v in C.coaction_left_basis(sym).items():
        assert ((v - one) if k == sym else v).is_zero()


def test_omega_is_bi_invariant():
    eta = C.right_invariant_forms()
    assert eta[("w0",)] == C.OneForm.basis(("w0",))


def test_theta_factors_through_the_determinant():
    det = C.lorentz_determinant()
    raw = C.right_invariant_forms(oriented=False)
    eta = C.right_invariant_forms()
    assert (det * det - P.one()).is_zero()
    for m in range(4):
        assert (eta[("vp", m)] - raw[("vp", m)] * det).is_zero()


def test_calculus_requires_four_dimensions():
    with pytest.raises(Exception):
        C.d_algebra(poincare(3).x(0))

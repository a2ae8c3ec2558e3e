import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kpoincare.algebra import AlgebraError, TensorElement, commutator, minkowski, poincare
from kpoincare.hopf import (
    antipode_defects,
    coassociativity_defect,
    counit_defects,
    lorentz_determinant,
    verify_associativity,
    verify_relations,
    verify_zero_test,
)
from kpoincare.lorentz import lambda_poly_is_zero
from kpoincare.scalars import ONE, T
from kpoincare.tensors import g

from strategies import elements, monomials

P = poincare(4)
M = minkowski(4)


def test_translation_commutators():
    # [x^0, x^k] = (i/kappa) x^k, spatial translations commute
    for k in range(1, 4):
        assert commutator(P.x(0), P.x(k)) == P.x(k) * T
    for j, k in itertools.combinations(range(1, 4), 2):
        assert commutator(P.x(j), P.x(k)) == P.zero()


def test_minkowski_commutators():
    y = M.x
    for k in range(1, 4):
        assert commutator(y(0), y(k)) == y(k) * T
    assert commutator(y(1), y(2)) == M.zero()


def test_lorentz_generators_commute():
    assert commutator(P.L(0, 1), P.L(2, 3)) == P.zero()


def test_translation_lorentz_commutator():
    # [x^r, L^m_k] = i/kappa ((L^m_0 - delta^m_0) L^r_k + (L^0_k - delta^0_k) g^{mr})
    r, m, k = 1, 1, 2
    rhs = (P.L(m, 0) * P.L(r, k) + P.L(0, k) * g(m, r)) * T
    assert commutator(P.x(r), P.L(m, k)) == rhs


def test_coproduct_of_generators():
    for mu in range(4):
        expected = TensorElement.pure(P.x(mu), P.one())
        for nu in range(4):
            expected = expected + TensorElement.pure(P.L(mu, nu), P.x(nu))
        assert P.x(mu).coproduct() == expected
    assert M.x(2).coproduct() == TensorElement.pure(M.x(2), M.one()) + TensorElement.pure(M.one(), M.x(2))


def test_counit_and_antipode_of_generators():
    assert P.L(1, 1).counit() == ONE
    assert P.L(1, 2).counit() == 0
    assert P.x(3).counit() == 0
    # S(L^m_n) = g_mm g^nn L^n_m
    assert P.L(0, 1).antipode() == -P.L(1, 0)
    assert P.L(2, 3).antipode() == P.L(3, 2)
    assert M.x(1).antipode() == -M.x(1)


def test_star_of_generators():
    assert P.x(0).star() == P.x(0)
    assert P.L(1, 2).star() == P.L(1, 2)
    assert (P.x(0) * T).star() == P.x(0) * (-T)


def test_index_out_of_range():
    with pytest.raises(AlgebraError):
        P.x(4)
    with pytest.raises(AlgebraError):
        M.L(0, 0)


@pytest.mark.parametrize("alg", [poincare(4), minkowski(4), poincare(2), minkowski(3)], ids=str)
def test_relations_respected_by_structure_maps(alg):
    assert all(r["status"] == "pass" for r in verify_relations(alg))


@pytest.mark.parametrize("alg", [poincare(4), minkowski(4)], ids=str)
def test_associativity_on_seeded_triples(alg):
    assert verify_associativity(alg, samples=60, max_degree=3)["status"] == "pass"


@given(monomials(P, 3), monomials(P, 3), monomials(P, 2))
def test_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(monomials(P, 2), monomials(P, 2))
def test_coproduct_and_counit_are_multiplicative(a, b):
    assert ((a * b).coproduct() - a.coproduct() * b.coproduct()).is_zero()
    assert (a * b).counit() == a.counit() * b.counit()


@given(monomials(P, 2), monomials(P, 2))
def test_antipode_is_antimultiplicative(a, b):
    assert ((a * b).antipode() - b.antipode() * a.antipode()).is_zero()


@given(elements(P), elements(P))
def test_star_is_an_involutive_antihomomorphism(a, b):
    assert (a * b).star() == b.star() * a.star()
    assert a.star().star() == a


@given(monomials(P, 2))
def test_hopf_axioms_poincare(a):
    assert coassociativity_defect(a).is_zero()
    assert all(d.is_zero() for d in counit_defects(a))
    assert all(d.is_zero() for d in antipode_defects(a))


@given(st.sampled_from([2, 3, 4]).flatmap(lambda n: monomials(minkowski(n), 4)))
def test_hopf_axioms_minkowski(a):
    assert coassociativity_defect(a).is_zero()
    assert all(d.is_zero() for d in counit_defects(a))
    assert all(d.is_zero() for d in antipode_defects(a))


def test_zero_test_on_lorentz_polynomials():
    assert verify_zero_test(P)[0]["status"] == "pass"
    orth = sum((P.L_low_up(r, 0) * P.L(r, 0) for r in range(4)), P.zero()) - 1
    assert orth.terms and lambda_poly_is_zero(orth)
    assert not lambda_poly_is_zero(P.L(0, 1))
    det = lorentz_determinant(P)
    assert not lambda_poly_is_zero(det - 1)  # improper components exist
    assert lambda_poly_is_zero(det * det - 1)

import itertools

import pytest
from hypothesis import given

from kpoincare import minkowski as mk
from kpoincare.algebra import TensorElement, minkowski, poincare
from kpoincare.ideals import Membership
from kpoincare.scalars import ONE, T

from strategies import monomials

DIMS = [2, 3, 4]


@pytest.mark.parametrize("n", DIMS)
def test_commutation_rules_match_the_quotient(n):
    for s in mk.symbols(n):
        for nu in range(n):
            assert mk.commutation_rule(n, s, nu) == mk.derived_commutation_rule(n, s, nu)


def test_tau_commutes_with_y_as_a_multiple_of_tau_mu():
    # [tau, y^mu] = -(n / kappa^2) tau^mu, fixed by the quotient computation
    n = 4
    rule = mk.commutation_rule(n, ("tau",), 2)
    assert rule == {("tau", 2): n * T * T}
    assert rule == mk.derived_commutation_rule(n, ("tau",), 2)


def test_spatial_tau_example():
    # [tau^1, y^1] = (i/kappa) tau^0 - (1/n) tau with g^{11} = -1
    n = 4
    rule = mk.commutation_rule(n, ("tau", 1), 1)
    assert rule == {("tau", 0): T, ("tau",): -ONE / n}


@pytest.mark.parametrize("n", DIMS)
def test_d_agrees_with_the_derived_route_and_squares_to_zero(n):
    M = minkowski(n)
    for a in mk.monomials(M, 3):
        assert (mk.minkowski_d(a) - mk.derived_d(a)).is_zero()
        assert not mk.d_oneform(mk.minkowski_d(a)).terms


@given(monomials(minkowski(3), 3), monomials(minkowski(3), 3))
def test_leibniz_rule(a, b):
    d = mk.minkowski_d
    assert (d(a * b) - (d(a) * b + a * d(b))).is_zero()


@pytest.mark.parametrize("n", DIMS)
def test_sigma_is_the_flip_and_the_wedge_is_antisymmetric(n):
    for (i, j), v in mk.derived_sigma(n).items():
        assert v == {(j, i): 1}
    for s, t in itertools.product(mk.symbols(n), repeat=2):
        u, v = mk.MinkowskiForm.basis(n, s), mk.MinkowskiForm.basis(n, t)
        assert (mk.minkowski_wedge(u, v) + mk.minkowski_wedge(v, u)).is_zero()


@pytest.mark.parametrize("n", DIMS)
def test_basis_forms_are_closed_and_bi_invariant(n):
    for s in mk.symbols(n):
        assert not mk.wedge_scalar_tensor(n, mk.derived_maurer_cartan(s, n))
        u = mk.MinkowskiForm.basis(n, s)
        assert mk.coaction_left(u) == {((), ()): u}
        assert mk.coaction_right(u) == {((), ()): u}


@pytest.mark.parametrize("n", DIMS)
def test_rho_is_a_coaction_and_a_homomorphism(n):
    M = minkowski(n)
    for a in mk.monomials(M, 2):
        assert all(mk.coaction_axioms(a).values()), str(a)
    for a, b in itertools.product(range(n), repeat=2):
        assert mk.rho_relation_defect(n, a, b).is_zero()


def test_rho_of_a_generator():
    n = 3
    P, M = poincare(n), minkowski(n)
    expected = TensorElement.pure(P.x(1), M.one())
    for nu in range(n):
        expected = expected + TensorElement.pure(P.L(1, nu), M.x(nu))
    assert mk.rho(M.x(1)) == expected


@pytest.mark.parametrize("n", DIMS)
def test_rho_tilde_on_basis_forms(n):
    for s in mk.symbols(n):
        got = mk.rho_tilde_on_forms(mk.MinkowskiForm.basis(n, s))
        assert mk.form_tensor_equal(got, mk.expected_rho_tilde(n, s))


@pytest.mark.parametrize("n", DIMS)
def test_rho_tilde_vanishes_on_the_relations(n):
    for label, gen in mk.ideal_generators(n):
        pairs = mk.omega_of(gen)
        assert mk.from_pairs(n, pairs).is_zero(), label
        values = mk.rho_tilde_on_pairs(n, pairs)
        assert all(v.is_zero() for v in values.values()), label


@pytest.mark.parametrize("n", DIMS)
def test_sub_bimodule_is_stable(n):
    for r in mk.rho_tilde_stability(n, 4):
        assert r["status"] == "pass", r["generator"]


@pytest.mark.parametrize("n", [2, 3])
def test_n_generators_lie_in_n(n):
    for _, gen in mk.ideal_generators(n):
        assert mk.n_membership(mk.n_generator(gen), 4) == Membership.IN


def test_module_structure_of_rho_tilde():
    n = 4
    P, M = poincare(n), minkowski(n)
    u = mk.MinkowskiForm.basis(n, ("tau", 0)).left_multiply(M.x(1))
    r1 = mk.rho(M.x(1))
    exp = {("tau", nu): r1 * TensorElement.pure(P.L(0, nu), M.one()) for nu in range(n)}
    assert mk.form_tensor_equal(mk.rho_tilde_on_forms(u), exp)


def test_minkowski_entry_points():
    from kpoincare.minkowski import minkowski_hopf, minkowski_normalize

    e = minkowski_normalize("y[1]*y[0]")
    assert e == minkowski_normalize("y[0]*y[1] - i*q*y[1]")
    h = minkowski_hopf(minkowski_normalize("y[0]"))
    assert h["counit"] == 0
    assert h["antipode"] == minkowski_normalize("-y[0]")
    s = minkowski_hopf(minkowski_normalize("y[0]*y[1]"))["antipode"]
    assert s == minkowski_normalize("y[1]*y[0]")

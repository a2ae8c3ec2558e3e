import pytest

from kpoincare.ideals import (
    Membership,
    ad_invariance_of,
    phi_element,
    poincare_ideal,
    poincare_quotient_span,
    verify_quotient_span,
    verify_star_compatibility,
    x_pair,
)
from kpoincare.minkowski import ideal_generators, minkowski_ideal, verify_minkowski_ideal


def test_poincare_quotient_is_fifteen_dimensional():
    ideal = poincare_ideal()
    for degree in (2, 3, 4):
        r = verify_quotient_span(ideal, poincare_quotient_span(), degree)
        assert r["status"] == "pass"
        assert r["quotient_dimension"] == 15


def test_poincare_generators_belong_to_their_ideal():
    ideal = poincare_ideal()
    for gen in ideal.generators[:20]:
        assert ideal.membership(gen, 4) == Membership.IN


def test_quotient_basis_elements_are_not_in_the_ideal():
    ideal = poincare_ideal()
    for rep in poincare_quotient_span().values():
        assert ideal.membership(rep, 4) != Membership.IN


def test_ad_invariance_holds_on_the_left_leg_for_a_generator():
    ideal = poincare_ideal()
    st = ad_invariance_of(ideal.generators[0], ideal, 4)
    assert st["left"] == "pass"


def test_poincare_star_compatibility():
    assert verify_star_compatibility(poincare_ideal(), 4)["status"] == "pass"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_minkowski_theorem(n):
    results = {r["check"]: r for r in verify_minkowski_ideal(n, 4)}
    assert results["quotient-span"]["quotient_dimension"] == n + 1
    assert all(r["status"] == "pass" for r in results.values())
    assert "left" in results["ad-invariance"]["legs_holding"]


@pytest.mark.parametrize("n", [2, 3])
def test_minkowski_generators_are_traceless_combinations(n):
    from kpoincare.algebra import minkowski

    M = minkowski(n)
    gens = dict(ideal_generators(n))
    assert len(gens) == n * n
    ideal = minkowski_ideal(n)
    # phi = sum_m g_mm y^m y^m is itself outside the ideal
    assert ideal.membership(phi_element(M), 4) != Membership.IN
    assert ideal.membership(x_pair(M, 0, 1), 4) == Membership.IN


def test_generator_list_lies_in_counit_kernel():
    from kpoincare.ideals import theorem1_generators
    from kpoincare.algebra import adjoint_action

    gens = theorem1_generators()
    assert gens and all(g.counit() == 0 for g in gens)
    assert adjoint_action(gens[0]) == gens[0].adjoint()

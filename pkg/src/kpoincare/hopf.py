"""Checks of the Hopf algebra axioms, of the compatibility of the structure
maps with the defining relations, and of the rewriting system itself.

Every check returns a result dict ``{label, status, witness, details}``;
``status`` is ``"pass"`` or ``"fail"`` and ``witness`` names the first
offending input.
"""

from __future__ import annotations

import itertools
import random
import time

from .algebra import (
    AlgebraElement,
    TensorElement,
    _LegMap,
    commutator,
    coproduct_leg,
    counit_leg,
    identity_leg,
)
from .lorentz import COMPONENTS, default_pool, lambda_poly_is_zero
from .scalars import ONE, T
from .tensors import delta, g


# ---------------------------------------------------------------------------
# inputs
# ---------------------------------------------------------------------------

def generators(alg) -> list[AlgebraElement]:
    out = []
    if alg.has_lorentz:
        out += [alg.L(m, k) for m in range(alg.n) for k in range(alg.n)]
    out += [alg.x(m) for m in range(alg.n)]
    return out


def random_monomial(alg, rng: random.Random, max_degree: int) -> AlgebraElement:
    """Product of ``d <= max_degree`` random generators in random order."""
    gens = generators(alg)
    out = alg.one()
    for _ in range(rng.randint(0, max_degree)):
        out = out * rng.choice(gens)
    return out


def random_monomials(alg, count: int, max_degree: int, seed: int) -> list[AlgebraElement]:
    rng = random.Random(f"{seed}:{alg.kind}:{alg.n}:{max_degree}")
    return [random_monomial(alg, rng, max_degree) for _ in range(count)]


def _name(e: AlgebraElement) -> str:
    return str(e)


def _result(label: str, failures: list, checked: int, t0: float, **details) -> dict:
    return {
        "label": label,
        "status": "fail" if failures else "pass",
        "witness": failures[0] if failures else None,
        "details": {"checked": checked, "failures": len(failures), **details},
        "seconds": round(time.perf_counter() - t0, 3),
    }


def _single(e: AlgebraElement) -> TensorElement:
    return TensorElement((e.alg,), {(m,): c for m, c in e.terms.items()})


# ---------------------------------------------------------------------------
# Hopf axioms
# ---------------------------------------------------------------------------

def coassociativity_defect(a: AlgebraElement) -> TensorElement:
    cop = a.coproduct()
    return cop.map_leg(0, coproduct_leg(a.alg)) - cop.map_leg(1, coproduct_leg(a.alg))


def counit_defects(a: AlgebraElement) -> tuple[TensorElement, TensorElement]:
    cop = a.coproduct()
    alg = a.alg
    left = cop.map_leg(0, counit_leg(alg))
    right = cop.map_leg(1, counit_leg(alg))
    return left - _single(a), right - _single(a)


def antipode_defects(a: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """m(S (x) id)Delta(a) - eps(a) and m(id (x) S)Delta(a) - eps(a)."""
    alg = a.alg
    cop = a.coproduct()
    s_leg = _LegMap(lambda m: {(k,): c for k, c in alg.antipode_monomial(m).items()}, (alg,))
    unit = alg.const(a.counit())
    left = cop.map_leg(0, s_leg).legs_multiplied() - unit
    right = cop.map_leg(1, s_leg).legs_multiplied() - unit
    return left, right


def verify_hopf_axioms(alg, samples: int = 100, max_degree: int = 4, seed: int = 1994) -> list[dict]:
    """Coassociativity, counit and antipode axioms on generators and random monomials."""
    inputs = [alg.one()] + generators(alg) + random_monomials(alg, samples, max_degree, seed)
    tag = f"{alg.kind}(n={alg.n})"
    out = []
    checks = (
        ("coassociativity", lambda a: [coassociativity_defect(a)]),
        ("counit", lambda a: list(counit_defects(a))),
        ("antipode", lambda a: list(antipode_defects(a))),
    )
    for name, fn in checks:
        t0 = time.perf_counter()
        failures = [_name(a) for a in inputs if not all(d.is_zero() for d in fn(a))]
        out.append(_result(f"hopf:{name}[{tag}]", failures, len(inputs), t0, max_degree=max_degree))
    return out


def verify_structure_maps(alg, samples: int = 100, max_degree: int = 4, seed: int = 1994) -> list[dict]:
    """Delta and eps are homomorphisms, S is an antihomomorphism, and the
    star structure is an involutive antilinear antihomomorphism compatible
    with S (star S star S = id)."""
    mons = random_monomials(alg, 2 * samples, max_degree // 2 or 1, seed + 1)
    pairs = list(zip(mons[::2], mons[1::2]))
    singles = generators(alg) + random_monomials(alg, samples, max_degree, seed + 2)
    tag = f"{alg.kind}(n={alg.n})"
    out = []

    t0 = time.perf_counter()
    bad = [f"{a} ; {b}" for a, b in pairs if not ((a * b).coproduct() - a.coproduct() * b.coproduct()).is_zero()]
    out.append(_result(f"hopf:coproduct-multiplicative[{tag}]", bad, len(pairs), t0))

    t0 = time.perf_counter()
    bad = [f"{a} ; {b}" for a, b in pairs if (a * b).counit() != a.counit() * b.counit()]
    out.append(_result(f"hopf:counit-multiplicative[{tag}]", bad, len(pairs), t0))

    t0 = time.perf_counter()
    bad = [f"{a} ; {b}" for a, b in pairs if not ((a * b).antipode() - b.antipode() * a.antipode()).is_zero()]
    out.append(_result(f"hopf:antipode-antimultiplicative[{tag}]", bad, len(pairs), t0))

    t0 = time.perf_counter()
    bad = [f"{a} ; {b}" for a, b in pairs if (a * b).star() != b.star() * a.star()]
    bad += [_name(a) for a in singles if a.star().star() != a]
    out.append(_result(f"star:involutive-antihomomorphism[{tag}]", bad, len(pairs) + len(singles), t0))

    t0 = time.perf_counter()
    bad = [_name(a) for a in singles if not (a.antipode().star().antipode().star() - a).is_zero()]
    out.append(_result(f"star:S-star-S-star-identity[{tag}]", bad, len(singles), t0))
    return out


# ---------------------------------------------------------------------------
# the defining relations and the rewriting system
# ---------------------------------------------------------------------------

def relation_instances(alg) -> list[tuple[str, AlgebraElement, AlgebraElement, AlgebraElement]]:
    """(label, a, b, [a, b] as given by the defining relations)."""
    n = alg.n
    out = []
    x = alg.x
    for m, k in itertools.product(range(n), repeat=2):
        rhs = alg.zero()
        if m == 0:
            rhs = rhs + x(k) * T
        if k == 0:
            rhs = rhs - x(m) * T
        out.append((f"[{alg.xname}{m},{alg.xname}{k}]", x(m), x(k), rhs))
    if alg.has_lorentz:
        L = alg.L
        for r, m, k in itertools.product(range(n), repeat=3):
            rhs = (L(m, 0) - delta(m, 0)) * L(r, k) + (L(0, k) - delta(0, k)) * g(m, r)
            out.append((f"[x{r},L{m}{k}]", x(r), L(m, k), rhs * T))
        for (m, k), (a, b) in itertools.combinations(itertools.product(range(n), repeat=2), 2):
            out.append((f"[L{m}{k},L{a}{b}]", L(m, k), L(a, b), alg.zero()))
    return out


def verify_relations(alg) -> list[dict]:
    """The normal form reproduces each relation, and Delta, eps, S respect it."""
    tag = f"{alg.kind}(n={alg.n})"
    insts = relation_instances(alg)
    out = []
    t0 = time.perf_counter()
    bad = [lab for lab, a, b, rhs in insts if not (commutator(a, b) - rhs).is_zero()]
    out.append(_result(f"relations:normal-form[{tag}]", bad, len(insts), t0))

    t0 = time.perf_counter()
    bad = []
    for lab, a, b, rhs in insts:
        da, db = a.coproduct(), b.coproduct()
        if not (da * db - db * da - rhs.coproduct()).is_zero():
            bad.append(lab)
    out.append(_result(f"relations:coproduct[{tag}]", bad, len(insts), t0))

    t0 = time.perf_counter()
    bad = [lab for lab, a, b, rhs in insts if rhs.counit() != 0]
    out.append(_result(f"relations:counit[{tag}]", bad, len(insts), t0))

    t0 = time.perf_counter()
    bad = []
    for lab, a, b, rhs in insts:
        sa, sb = a.antipode(), b.antipode()
        if not (sb * sa - sa * sb - rhs.antipode()).is_zero():
            bad.append(lab)
    out.append(_result(f"relations:antipode[{tag}]", bad, len(insts), t0))
    return out


def verify_associativity(alg, samples: int = 200, max_degree: int = 3, seed: int = 1994) -> dict:
    """normalize((ab)c) = normalize(a(bc)) exactly on random triples."""
    t0 = time.perf_counter()
    mons = random_monomials(alg, 3 * samples, max_degree, seed + 3)
    bad = []
    for a, b, c in zip(mons[::3], mons[1::3], mons[2::3]):
        if (a * b) * c != a * (b * c):
            bad.append(f"{a} ; {b} ; {c}")
    return _result(f"rewriting:associativity[{alg.kind}(n={alg.n})]", bad, samples, t0, max_degree=max_degree)


# ---------------------------------------------------------------------------
# zero-testing of Lorentz polynomials
# ---------------------------------------------------------------------------

def lorentz_determinant(alg) -> AlgebraElement:
    n = alg.n
    out = alg.zero()
    for perm in itertools.permutations(range(n)):
        term = alg.const(_sign(perm))
        for r, c in zip(range(n), perm):
            term = term * alg.L(r, c)
        out = out + term
    return out


def _sign(perm) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def verify_zero_test(alg) -> list[dict]:
    """Orthogonality polynomials vanish, nonzero functions do not, and the
    determinant separates the components."""
    n = alg.n
    pool = default_pool(n)
    out = []
    t0 = time.perf_counter()
    bad = []
    for m, k in itertools.product(range(n), repeat=2):
        first = sum((alg.L_low_up(r, m) * alg.L(r, k) for r in range(n)), alg.zero()) - delta(m, k)
        second = sum((alg.L(m, r) * alg.L_low_up(k, r) for r in range(n)), alg.zero()) - delta(m, k)
        if not (lambda_poly_is_zero(first) and lambda_poly_is_zero(second)):
            bad.append(f"orthogonality[{m},{k}]")
    for m, k in itertools.product(range(n), repeat=2):
        if lambda_poly_is_zero(alg.L(m, k)):
            bad.append(f"L[{m},{k}] reported zero")
    det = lorentz_determinant(alg)
    if not lambda_poly_is_zero(det * det - ONE):
        bad.append("det^2 - 1")
    for comp in COMPONENTS:
        pts = [p for p in pool.points if p.component == comp]
        sign = 1 if comp in ("identity", "parity-time") else -1
        vals = {p.determinant() for p in pts}
        if vals != {sign}:
            bad.append(f"det on {comp}")
    if not all(p.is_lorentz() for p in pool.points):
        bad.append("sample point off the group")
    return [_result(f"lorentz:zero-test[n={n}]", bad, len(pool.points), t0, points=len(pool.points))]

"""Right ideals in the group algebras, bounded-degree membership, and the
structural checks on them (ad-invariance, S(a)* in R, dimension of
ker(eps)/R).

Membership in the kappa-Poincare ideal is decided in the 1-jet quotient
W = P / J, where J = m_e^2 P and m_e is the ideal of Lorentz functions
vanishing at the identity.  J is contained in R (R contains every product
(L - 1)(L - 1)) and is two-sided because the vector fields generated by
[x^r, .] vanish at the identity, so the reduction is exact.  A vector of W
is a dict ``{(k, word): Scalar}`` with ``k = ()`` for the Lorentz-constant
part and ``k = (m, n)``, ``m < n``, for the coefficient of L^m_n - delta^m_n.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .algebra import UNIT, Algebra, AlgebraElement, TensorElement, poincare
from .linalg import Echelon
from .lorentz import _eval_poly, default_pool
from .scalars import ONE, ZERO, T, Scalar, scalar
from .tensors import delta, eps_lower, eps_upper, g


class Membership(str, enum.Enum):
    IN = "pass"
    OUT = "fail"
    INCONCLUSIVE = "inconclusive"

    def __bool__(self):
        return self is Membership.IN


# ---------------------------------------------------------------------------
# jets
# ---------------------------------------------------------------------------

def jet_vector(e: AlgebraElement) -> dict:
    """Image of ``e`` in W (see module docstring)."""
    alg = e.alg
    out: dict = {}
    if not alg.has_lorentz:
        for (_, w), c in e.terms.items():
            out[((), w)] = c
        return out
    n = alg.n
    for (lam, word), c in e.terms.items():
        off = [v for v in lam if v // n != v % n]
        if len(off) > 1:
            continue
        if not off:
            key = ((), word)
            s = c
        else:
            mu, nu = divmod(off[0], n)
            if mu < nu:
                key = ((mu, nu), word)
                s = c
            else:
                key = ((nu, mu), word)
                s = c * (-g(mu) * g(nu))
        v = out.get(key)
        v = s if v is None else v + s
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def jet_degree(col) -> int:
    k, w = col
    return len(w) + (1 if k else 0)


def _jet_priority(col):
    k, w = col
    return (jet_degree(col), w, k)


def jet_basis_monomials(alg: Algebra, max_degree: int) -> list[AlgebraElement]:
    """Representatives of a basis of W up to the given degree."""
    n = alg.n
    out = []
    words = [w for d in range(max_degree + 1) for w in itertools.combinations_with_replacement(range(n), d)]
    for w in words:
        out.append(AlgebraElement(alg, {((), w): ONE}))
    if alg.has_lorentz:
        for w in words:
            if len(w) + 1 > max_degree:
                continue
            for a in range(n):
                for b in range(a + 1, n):
                    out.append(alg.A(a, b) * AlgebraElement(alg, {((), w): ONE}))
    return out


def jet_space_dimension(alg: Algebra, max_degree: int) -> int:
    """dim of the degree <= D part of W."""
    n = alg.n
    from math import comb

    words = lambda d: comb(d + n - 1, n - 1)  # noqa: E731
    total = sum(words(d) for d in range(max_degree + 1))
    if alg.has_lorentz:
        total += (n * (n - 1) // 2) * sum(words(d) for d in range(max_degree))
    return total


# ---------------------------------------------------------------------------
# right ideals
# ---------------------------------------------------------------------------

@dataclass
class FiltrationBasis:
    degree: int
    echelon: Echelon
    spanning_count: int

    @property
    def rank(self) -> int:
        return self.echelon.rank


@dataclass
class RightIdeal:
    """Right ideal generated by ``generators`` (each in ker eps).

    ``contains_jet_square`` marks kappa-Poincare ideals known to contain every
    product (L - 1)(L - 1); only those use the exact 1-jet reduction.  Other
    kappa-Poincare ideals fall back to sample-point evaluation of the Lorentz
    polynomials.
    """

    alg: Algebra
    generators: list
    labels: list = field(default_factory=list)
    contains_jet_square: bool = False
    name: str = "R"
    _filtrations: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.labels:
            self.labels = [f"g{k}" for k in range(len(self.generators))]
        for lab, gen in zip(self.labels, self.generators):
            if gen.alg is not self.alg:
                raise ValueError(f"generator {lab} lives in a different algebra")
            if gen.counit():
                raise ValueError(f"generator {lab} is not in ker(eps)")

    @property
    def mode(self) -> str:
        if not self.alg.has_lorentz:
            return "words"
        return "jet" if self.contains_jet_square else "sampled"

    # -- vectorization ---------------------------------------------------------
    def vector(self, e: AlgebraElement) -> dict:
        if self.mode != "sampled":
            return jet_vector(e)
        pool = default_pool(self.alg.n)
        groups: dict = {}
        for (lam, word), c in e.terms.items():
            groups.setdefault(word, {})[(lam,)] = c
        out = {}
        for word, poly in groups.items():
            for k, p in enumerate(pool.points):
                v = _eval_poly(poly, (p,))
                if v:
                    out[(k, word)] = v
        return out

    def _priority(self, col):
        if self.mode == "sampled":
            return (len(col[1]), col[1], col[0])
        return _jet_priority(col)

    def element_degree(self, e: AlgebraElement) -> int:
        if self.mode == "sampled":
            return e.degree()
        return max((jet_degree(c) for c in jet_vector(e)), default=-1)

    def _multipliers(self, max_degree: int) -> list:
        if max_degree < 0:
            return []
        if self.mode == "sampled":
            alg = self.alg
            nv = alg.n * alg.n
            out = []
            for d in range(max_degree + 1):
                for a in range(d + 1):
                    for lam in itertools.combinations_with_replacement(range(nv), a):
                        for w in itertools.combinations_with_replacement(range(alg.n), d - a):
                            out.append((d, AlgebraElement(alg, {(lam, w): ONE})))
            return out
        return [(max(jet_degree(c) for c in jet_vector(m)) if m.terms else 0, m)
                for m in jet_basis_monomials(self.alg, max_degree)]

    def filtration(self, max_degree: int) -> FiltrationBasis:
        fb = self._filtrations.get(max_degree)
        if fb is not None:
            return fb
        pre = Echelon(self._priority)
        gens = []
        for gen in self.generators:
            v = self.vector(gen)
            if v and pre.add(v) is not None:
                gens.append(gen)
        ech = Echelon(self._priority)
        mults = self._multipliers(max_degree)
        count = 0
        for gen in gens:
            dg = self.element_degree(gen)
            for dm, m in mults:
                if dg + dm > max_degree:
                    continue
                ech.add(self.vector(gen * m))
                count += 1
        fb = FiltrationBasis(max_degree, ech, count)
        self._filtrations[max_degree] = fb
        return fb

    def generator_degree(self) -> int:
        return max(self.element_degree(gg) for gg in self.generators)

    def membership(self, e: AlgebraElement, max_degree: int) -> Membership:
        if e.counit():
            return Membership.OUT
        fb = self.filtration(max_degree)
        if fb.echelon.contains(self.vector(e)):
            return Membership.IN
        if max_degree - self.element_degree(e) < self.generator_degree():
            return Membership.INCONCLUSIVE
        return Membership.OUT


def ideal_membership(e: AlgebraElement, ideal: RightIdeal, max_degree: int) -> Membership:
    return ideal.membership(e, max_degree)


# ---------------------------------------------------------------------------
# quotient ker(eps)/R
# ---------------------------------------------------------------------------

class Quotient:
    """Coordinates on ker(eps)/R relative to named representatives."""

    def __init__(self, ideal: RightIdeal, span: dict, max_degree: int):
        self.ideal = ideal
        self.max_degree = max_degree
        self.labels = list(span)
        self.span = span
        fb = ideal.filtration(max_degree)
        ech = Echelon(ideal._priority)
        ech.rows = dict(fb.echelon.rows)
        self.dependent = []
        for lab, rep in span.items():
            if ech.add(ideal.vector(rep), {lab: ONE}) is None:
                self.dependent.append(lab)
        self.echelon = ech

    def coordinates(self, e: AlgebraElement) -> dict:
        """pi(e - eps(e)) as {label: Scalar}; raises if the degree budget is too small."""
        v = self.ideal.vector(e)
        if self.ideal.mode != "sampled":
            v.pop(((), ()), None)
        else:
            c = e.counit()
            if c:
                v = self.ideal.vector(e - e.alg.const(c))
        res, acc = self.echelon.reduce(v)
        if res:
            raise ValueError(
                f"element not reducible into the quotient span at degree {self.max_degree}"
            )
        return acc


def verify_quotient_span(ideal: RightIdeal, claimed: dict, max_degree: int) -> dict:
    fb = ideal.filtration(max_degree)
    alg = ideal.alg
    if ideal.mode == "sampled":
        raise ValueError("quotient span check requires a jet-exact or Minkowski ideal")
    total = jet_space_dimension(alg, max_degree) - 1
    quotient_dim = total - fb.rank
    visible = {lab: rep for lab, rep in claimed.items() if ideal.element_degree(rep) <= max_degree}
    q = Quotient(ideal, visible, max_degree)
    independent = [lab for lab in visible if lab not in q.dependent]
    first_bad = None
    for mono in jet_basis_monomials(alg, max_degree):
        v = ideal.vector(mono)
        v.pop(((), ()), None)
        if v and q.echelon.reduce(v)[0]:
            first_bad = alg.monomial_str(next(iter(mono.terms))) if len(mono.terms) == 1 else str(mono)
            break
    ok = first_bad is None and len(independent) == quotient_dim
    return {
        "check": "quotient-span",
        "degree": max_degree,
        "status": "pass" if ok else "fail",
        "quotient_dimension": quotient_dim,
        "claimed_visible": len(visible),
        "claimed_independent": len(independent),
        "witness": first_bad,
    }


# ---------------------------------------------------------------------------
# ad-invariance and star compatibility
# ---------------------------------------------------------------------------

def _leg_cofactors(ad: TensorElement, ideal: RightIdeal, ideal_leg: int) -> dict:
    """Expand the non-ideal leg in a separating family of functionals and
    return the cofactor vectors on the ideal leg."""
    other = 1 - ideal_leg
    alg = ad.algs[other]
    pool = default_pool(alg.n) if alg.has_lorentz else None
    out: dict = {}
    vec_cache: dict = {}
    for key, c in ad.terms.items():
        m = key[ideal_leg]
        v = vec_cache.get(m)
        if v is None:
            v = vec_cache[m] = ideal.vector(AlgebraElement(ideal.alg, {m: ONE}))
        if not v:
            continue
        lam, word = key[other]
        if pool is None:
            evals = [((word,), c)]
        else:
            evals = []
            for k, p in enumerate(pool.points):
                val = _eval_poly({(lam,): c}, (p,))
                if val:
                    evals.append(((k, word), val))
        for col_key, val in evals:
            d = out.setdefault(col_key, {})
            for col, cc in v.items():
                nv = d.get(col, ZERO) + cc * val
                if nv:
                    d[col] = nv
                else:
                    d.pop(col, None)
    return {k: v for k, v in out.items() if v}


def _vector_status(ideal: RightIdeal, vec: dict, max_degree: int, degree: int) -> Membership:
    if ideal.mode != "sampled" and vec.get(((), ())):
        return Membership.OUT
    if ideal.filtration(max_degree).echelon.contains(vec):
        return Membership.IN
    if max_degree - degree < ideal.generator_degree():
        return Membership.INCONCLUSIVE
    return Membership.OUT


def _combine(statuses) -> Membership:
    statuses = list(statuses)
    if all(s is Membership.IN for s in statuses):
        return Membership.IN
    if any(s is Membership.OUT for s in statuses):
        return Membership.OUT
    return Membership.INCONCLUSIVE


def ad_invariance_of(gen: AlgebraElement, ideal: RightIdeal, max_degree: int) -> dict:
    """Status of ad(gen) in R (x) A ("left") and in A (x) R ("right")."""
    ad = gen.adjoint()
    out = {}
    for leg, name in ((0, "left"), (1, "right")):
        cof = _leg_cofactors(ad, ideal, leg)
        sts = []
        for vec in cof.values():
            if ideal.mode == "sampled":
                deg = max(len(c[1]) for c in vec)
            else:
                deg = max(jet_degree(c) for c in vec)
            sts.append(_vector_status(ideal, vec, max_degree, deg))
        out[name] = _combine(sts).value
    return out


def verify_ad_invariance(ideal: RightIdeal, max_degree: int) -> dict:
    results = []
    legs_ok = {"left": True, "right": True}
    for lab, gen in zip(ideal.labels, ideal.generators):
        st = ad_invariance_of(gen, ideal, max_degree)
        for leg in legs_ok:
            legs_ok[leg] &= st[leg] == "pass"
        results.append({"generator": lab, "left": st["left"], "right": st["right"]})
    holding = [leg for leg, ok in legs_ok.items() if ok]
    return {
        "check": "ad-invariance",
        "status": "pass" if holding else "fail",
        "leg": holding[0] if holding else None,
        "legs_holding": holding,
        "generators": results,
    }


def verify_star_compatibility(ideal: RightIdeal, max_degree: int, extra: list | None = None) -> dict:
    results = []
    items = list(zip(ideal.labels, ideal.generators)) + list(extra or [])
    for lab, gen in items:
        st = ideal.membership(gen.antipode().star(), max_degree)
        results.append({"generator": lab, "status": st.value})
    ok = all(r["status"] == "pass" for r in results)
    return {"check": "star-compatibility", "status": "pass" if ok else "fail", "generators": results}


# ---------------------------------------------------------------------------
# the kappa-Poincare ideal
# ---------------------------------------------------------------------------

def L_upper(alg: Algebra, mu: int, nu: int) -> AlgebraElement:
    """L^{mu nu} = L^mu_rho g^{rho nu}."""
    return alg.L(mu, nu) * g(nu)


def delta_tensor(alg: Algebra, mu: int, nu: int, al: int) -> AlgebraElement:
    """Delta^{mu nu al} with every index up.

    x^al (L^{mu nu} - g^{mu nu})
      - (i/kappa)[g^{0 nu}(L^{mu al} - g^{mu al}) + g^{mu 0}(L^{al nu} - g^{al nu})]
    """
    x = alg.x
    out = x(al) * (L_upper(alg, mu, nu) - g(mu, nu))
    corr = alg.zero()
    if nu == 0:
        corr = corr + (L_upper(alg, mu, al) - g(mu, al))
    if mu == 0:
        corr = corr + (L_upper(alg, al, nu) - g(al, nu))
    return out - corr * T


def x_pair(alg: Algebra, mu: int, nu: int) -> AlgebraElement:
    """x^{mu nu} = x^mu x^nu + (i/kappa)(g^{mu nu} x^0 - g^{0 mu} x^nu)."""
    x = alg.x
    out = x(mu) * x(nu)
    corr = x(0) * g(mu, nu)
    if mu == 0:
        corr = corr - x(nu)
    return out + corr * T


def phi_element(alg: Algebra) -> AlgebraElement:
    """phi = x^a_a = x^2 + (3i/kappa) x^0."""
    return sum((x_pair(alg, m, m) * g(m) for m in range(alg.n)), alg.zero())


def phi_vector(alg: Algebra, mu: int) -> AlgebraElement:
    """phi_mu = eps_{mu nu al be} Delta^{nu al be}."""
    out = alg.zero()
    for a, b, c in itertools.permutations([k for k in range(4) if k != mu], 3):
        s = eps_lower(mu, a, b, c)
        if s:
            out = out + delta_tensor(alg, a, b, c) * s
    return out


def poincare_ideal_generators(alg: Algebra | None = None) -> list[tuple[str, AlgebraElement]]:
    alg = alg or poincare(4)
    if alg.n != 4 or not alg.has_lorentz:
        raise ValueError("the kappa-Poincare ideal is defined for n = 4")
    out = []
    pairs = [(a, b) for a in range(4) for b in range(4)]
    for i, (a, b) in enumerate(pairs):
        for (m, n) in pairs[i:]:
            out.append((f"AA[{a},{b};{m},{n}]", alg.A(a, b) * alg.A(m, n)))
    traces = {b: phi_vector(alg, b) for b in range(4)}
    sixth = scalar(1) / 6
    for m, n, a in itertools.product(range(4), repeat=3):
        sub = alg.zero()
        for b in range(4):
            s = eps_upper(m, n, a, b)
            if s:
                sub = sub + traces[b] * s
        out.append((f"Dt[{m},{n},{a}]", delta_tensor(alg, m, n, a) - sub * sixth))
    phi = phi_element(alg)
    quarter = scalar(1) / 4
    for m, n in itertools.product(range(4), repeat=2):
        out.append((f"xt[{m},{n}]", x_pair(alg, m, n) - phi * (g(m, n) * quarter)))
    return out


def poincare_ideal(alg: Algebra | None = None) -> RightIdeal:
    gens = poincare_ideal_generators(alg)
    return _cached_ideal(
        "poincare",
        lambda: RightIdeal(
            gens[0][1].alg,
            [e for _, e in gens],
            [lab for lab, _ in gens],
            contains_jet_square=True,
            name="R (kappa-Poincare)",
        ),
    )


def poincare_quotient_span(alg: Algebra | None = None) -> dict:
    """Representatives of the 15 quotient classes, keyed by their form symbols."""
    alg = alg or poincare(4)
    span = {}
    for a in range(4):
        for b in range(a + 1, 4):
            # omega^{ab} = g^{bb} omega^a_b, omega^a_b <-> L^a_b - delta
            span[("w2", a, b)] = alg.A(a, b) * g(b)
    for a in range(4):
        span[("w1", a)] = alg.x(a)
    span[("w0",)] = phi_element(alg)
    for a in range(4):
        span[("vp", a)] = phi_vector(alg, a)
    return span


_IDEALS: dict = {}


def _cached_ideal(key, factory):
    r = _IDEALS.get(key)
    if r is None:
        r = _IDEALS[key] = factory()
    return r


def poincare_quotient(max_degree: int = 4) -> Quotient:
    key = ("q1", max_degree)
    q = _IDEALS.get(key)
    if q is None:
        q = _IDEALS[key] = Quotient(poincare_ideal(), poincare_quotient_span(), max_degree)
        if q.dependent:
            raise RuntimeError(f"quotient representatives dependent modulo R: {q.dependent}")
    return q


def theorem1_generators(alg: Algebra | None = None) -> list[AlgebraElement]:
    """Generators of the kappa-Poincare ideal, without their labels."""
    return [e for _, e in poincare_ideal_generators(alg)]

"""The n-dimensional kappa-Minkowski space M, its (n+1)-dimensional
bicovariant calculus and the covariance of that calculus under the
kappa-Poincare action rho: M -> P (x) M.

Basis 1-forms are ``("tau", m)`` for tau^m = d y^m and ``("tau",)`` for
tau = d phi - 2 y_m d y^m, with phi = y^2 + (n-1)(i/kappa) y^0.  Both are
left- and right-invariant.  Two-forms are spanned by ``("tt", m, n)``
(tau^m ^ tau^n, m < n) and ``("ts", m)`` (tau^m ^ tau).

As for the kappa-Poincare calculus, the commutation rules are kept as an
explicit table and rederived from the quotient map ker(eps) -> ker(eps)/R:
since Delta y = y (x) I + I (x) y, omega(b) y^m = y^m omega(b) + omega(b y^m).
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .algebra import UNIT, AlgebraElement, TensorElement, _acc, _LegMap, coproduct_leg, counit_leg, minkowski, poincare
from .forms import Form, SymbolSpace
from .ideals import (
    Membership,
    Quotient,
    RightIdeal,
    _cached_ideal,
    phi_element,
    verify_ad_invariance,
    verify_quotient_span,
    verify_star_compatibility,
    x_pair,
)
from .lorentz import default_pool, element_values
from .scalars import ONE, ZERO, T, scalar
from .tensors import g

KAPPA2_INV = -(T * T)
DEFAULT_DEGREE = 5


# ---------------------------------------------------------------------------
# algebra helpers
# ---------------------------------------------------------------------------

def y(alg, mu: int) -> AlgebraElement:
    return alg.x(mu)


def phi(alg) -> AlgebraElement:
    """phi = y^2 + (n-1)(i/kappa) y^0."""
    return phi_element(alg)


def word(alg, w) -> AlgebraElement:
    return AlgebraElement(alg, {((), tuple(w)): ONE}) if list(w) == sorted(w) else _word_product(alg, w)


def _word_product(alg, w) -> AlgebraElement:
    out = alg.one()
    for mu in w:
        out = out * alg.x(mu)
    return out


def monomials(alg, max_degree: int, min_degree: int = 0) -> list[AlgebraElement]:
    """Normal-form monomials of M of degree in [min_degree, max_degree]."""
    return [
        AlgebraElement(alg, {((), w): ONE})
        for d in range(min_degree, max_degree + 1)
        for w in itertools.combinations_with_replacement(range(alg.n), d)
    ]


def random_monomials(alg, count: int, max_degree: int, seed: int) -> list[AlgebraElement]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(0, max_degree)
        out.append(_word_product(alg, [rng.randrange(alg.n) for _ in range(d)]))
    return out


# ---------------------------------------------------------------------------
# the right ideal and the quotient
# ---------------------------------------------------------------------------

def ideal_generators(n: int = 4) -> list[tuple[str, AlgebraElement]]:
    """The trace-free combinations y~^{mu nu} = y^{mu nu} - (1/n) g^{mu nu} phi."""
    alg = minkowski(n)
    ph = phi(alg)
    inv = scalar(1) / n
    out = []
    for m, k in itertools.product(range(n), repeat=2):
        out.append((f"yt[{m},{k}]", x_pair(alg, m, k) - ph * (g(m, k) * inv)))
    trace = sum((e * g(m) for (_, e), (m, k) in zip(out, itertools.product(range(n), repeat=2)) if m == k), alg.zero())
    if trace:
        raise AssertionError("trace identity g_{mu nu} y~^{mu nu} = 0 violated")
    return out


def minkowski_ideal(n: int = 4) -> RightIdeal:
    def build():
        gens = ideal_generators(n)
        return RightIdeal(minkowski(n), [e for _, e in gens], [lab for lab, _ in gens], name=f"R (kappa-Minkowski, n={n})")

    return _cached_ideal(("minkowski", n), build)


theorem2_ideal = minkowski_ideal


def quotient_span(n: int = 4) -> dict:
    alg = minkowski(n)
    span = {("tau", m): alg.x(m) for m in range(n)}
    span[("tau",)] = phi(alg)
    return span


def minkowski_quotient(n: int = 4, max_degree: int = DEFAULT_DEGREE) -> Quotient:
    key = ("qm", n, max_degree)

    def build():
        q = Quotient(minkowski_ideal(n), quotient_span(n), max_degree)
        if q.dependent:
            raise RuntimeError(f"quotient representatives dependent modulo R: {q.dependent}")
        return q

    return _cached_ideal(key, build)


def pi(a: AlgebraElement, max_degree: int | None = None) -> dict:
    """Coordinates of pi(a - eps(a)) on the tau basis."""
    deg = max(DEFAULT_DEGREE, a.degree() + 1) if max_degree is None else max_degree
    return minkowski_quotient(a.alg.n, deg).coordinates(a)


def verify_minkowski_ideal(n: int = 4, max_degree: int = DEFAULT_DEGREE) -> list[dict]:
    """ad-invariance, S(a)* in R and the dimension of ker(eps)/R."""
    ideal = minkowski_ideal(n)
    out = []
    ad = verify_ad_invariance(ideal, max_degree)
    out.append(ad)
    out.append(verify_star_compatibility(ideal, max_degree))
    span = verify_quotient_span(ideal, quotient_span(n), max_degree)
    span["expected_dimension"] = n + 1
    if span["quotient_dimension"] != n + 1:
        span["status"] = "fail"
    out.append(span)
    for r in out:
        r["n"] = n
    return out


# ---------------------------------------------------------------------------
# forms
# ---------------------------------------------------------------------------

def symbols(n: int) -> tuple:
    return tuple(("tau", m) for m in range(n)) + (("tau",),)


def _sym_key(sym, n):
    return sym[1] if len(sym) == 2 else n


class _TauSpace(SymbolSpace):
    name = "minkowski-forms"

    def __init__(self, n: int):
        self.n = n

    def key(self, sym):
        return _sym_key(sym, self.n)

    def text(self, sym):
        return f"tau^{sym[1]}" if len(sym) == 2 else "tau"

    def latex(self, sym):
        return f"\\tau^{{{sym[1]}}}" if len(sym) == 2 else "\\tau"


class _TauTwoSpace(SymbolSpace):
    name = "minkowski-two-forms"

    def __init__(self, n: int):
        self.n = n

    def key(self, sym):
        return (sym[1], sym[2]) if sym[0] == "tt" else (sym[1], self.n)

    def text(self, sym):
        if sym[0] == "tt":
            return f"tau^{sym[1]}/\\tau^{sym[2]}"
        return f"tau^{sym[1]}/\\tau"

    def latex(self, sym):
        if sym[0] == "tt":
            return f"\\tau^{{{sym[1]}}} \\wedge \\tau^{{{sym[2]}}}"
        return f"\\tau^{{{sym[1]}}} \\wedge \\tau"


@lru_cache(maxsize=None)
def _spaces(n: int):
    return _TauSpace(n), _TauTwoSpace(n)


def two_form_basis(n: int) -> tuple:
    out = [("tt", a, b) for a in range(n) for b in range(a + 1, n)]
    out += [("ts", a) for a in range(n)]
    return tuple(out)


class MinkowskiForm(Form):
    """sum_s c_s tau_s with coefficients in M on the left."""

    def __init__(self, n: int = 4, terms: dict | None = None):
        super().__init__(minkowski(n), _spaces(n)[0], terms)

    def _new(self, terms):
        return MinkowskiForm(self.alg.n, terms)

    @property
    def n(self) -> int:
        return self.alg.n

    @classmethod
    def basis(cls, n: int, sym) -> MinkowskiForm:
        if sym not in symbols(n):
            raise KeyError(f"unknown form symbol {sym!r}")
        return cls(n, {sym: minkowski(n).one()})

    @classmethod
    def of(cls, n: int, coeffs: dict) -> MinkowskiForm:
        alg = minkowski(n)
        return cls(n, {s: alg.const(c) for s, c in coeffs.items()})

    def right_multiply(self, a: AlgebraElement) -> MinkowskiForm:
        out: dict = {}
        for s, c in self.terms.items():
            for s2, c2 in move_coefficient_left(s, a).terms.items():
                v = c * c2
                out[s2] = out[s2] + v if s2 in out else v
        return MinkowskiForm(self.n, out)


class MinkowskiTwoForm(Form):
    def __init__(self, n: int = 4, terms: dict | None = None):
        super().__init__(minkowski(n), _spaces(n)[1], terms)

    def _new(self, terms):
        return MinkowskiTwoForm(self.alg.n, terms)


# ---------------------------------------------------------------------------
# commutation rules
# ---------------------------------------------------------------------------

def commutation_rule(n: int, sym, nu: int) -> dict:
    """[tau_s, y^nu] as {symbol: Scalar} (tabulated)."""
    out: dict = {}
    if len(sym) == 2:
        mu = sym[1]
        if mu == 0:
            out[("tau", nu)] = T  # (i/kappa) g^{0 mu} tau^nu
        if mu == nu:
            gm = g(mu)
            _acc(out, ("tau", 0), -T * gm)
            _acc(out, ("tau",), scalar(gm) / n)
    else:
        out[("tau", nu)] = -KAPPA2_INV * n
    return out


def derived_commutation_rule(n: int, sym, nu: int) -> dict:
    """[omega(b), y^nu] = omega(b y^nu) with b the quotient representative of ``sym``."""
    alg = minkowski(n)
    b = quotient_span(n)[sym]
    return pi(b * alg.x(nu))


@lru_cache(maxsize=None)
def _move_word(n: int, sym, w: tuple) -> dict:
    """tau_s * y^{w} = sum_t c_t tau_t, as {t: AlgebraElement}."""
    alg = minkowski(n)
    if not w:
        return {sym: alg.one()}
    first, rest = w[0], w[1:]
    out: dict = {}
    # tau_s y^first = y^first tau_s + [tau_s, y^first]
    terms = [(sym, alg.x(first))]
    terms += [(t, alg.const(c)) for t, c in commutation_rule(n, sym, first).items()]
    for t, left in terms:
        for t2, c in _move_word(n, t, rest).items():
            v = left * c
            out[t2] = out[t2] + v if t2 in out else v
    return {t: c for t, c in out.items() if c}


def move_coefficient_left(sym, a: AlgebraElement) -> MinkowskiForm:
    """tau_s * a written as sum_t c_t tau_t."""
    n = a.alg.n
    out: dict = {}
    for (_, w), c in a.terms.items():
        for t, e in _move_word(n, sym, w).items():
            v = e.scale(c)
            out[t] = out[t] + v if t in out else v
    return MinkowskiForm(n, out)


def derived_move(sym, a: AlgebraElement) -> MinkowskiForm:
    """tau_s * a from omega(b) a = sum a_(1) omega(b a_(2))."""
    n = a.alg.n
    alg = a.alg
    b = quotient_span(n)[sym]
    out: dict = {}
    for (m1, m2), c in a.coproduct().terms.items():
        left = AlgebraElement(alg, {m1: c})
        for t, v in pi(b * AlgebraElement(alg, {m2: ONE})).items():
            e = left.scale(v)
            out[t] = out[t] + e if t in out else e
    return MinkowskiForm(n, out)


# ---------------------------------------------------------------------------
# exterior derivative
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _d_word(n: int, w: tuple) -> dict:
    """d(y^{w}) via the Leibniz rule and d y^m = tau^m."""
    alg = minkowski(n)
    out: dict = {}
    for i, mu in enumerate(w):
        left = AlgebraElement(alg, {((), w[:i]): ONE})
        for t, c in _move_word(n, ("tau", mu), w[i + 1 :]).items():
            v = left * c
            out[t] = out[t] + v if t in out else v
    return {t: c for t, c in out.items() if c}


def minkowski_d(a: AlgebraElement) -> MinkowskiForm:
    n = a.alg.n
    out: dict = {}
    for (_, w), c in a.terms.items():
        for t, e in _d_word(n, w).items():
            v = e.scale(c)
            out[t] = out[t] + v if t in out else v
    return MinkowskiForm(n, out)


def derived_d(a: AlgebraElement) -> MinkowskiForm:
    """da = sum a_(1) omega(pi(a_(2)))."""
    n = a.alg.n
    alg = a.alg
    out: dict = {}
    for (m1, m2), c in a.coproduct().terms.items():
        if m2 == UNIT:
            continue
        left = AlgebraElement(alg, {m1: c})
        for t, v in pi(AlgebraElement(alg, {m2: ONE})).items():
            e = left.scale(v)
            out[t] = out[t] + e if t in out else e
    return MinkowskiForm(n, out)


def tau_representation(n: int, sym) -> list:
    """tau_s as pairs (a, b) with tau_s = sum a db."""
    alg = minkowski(n)
    if len(sym) == 2:
        return [(alg.one(), alg.x(sym[1]))]
    out = [(alg.one(), phi(alg))]
    out += [(alg.x(m).scale(-2 * g(m)), alg.x(m)) for m in range(n)]
    return out


def differential_representation(u: MinkowskiForm) -> list:
    """u as a list of pairs (a, b) with u = sum a db."""
    out = []
    for s, c in u.sorted_terms():
        out += [(c * a, b) for a, b in tau_representation(u.n, s)]
    return out


def from_pairs(n: int, pairs: list) -> MinkowskiForm:
    out = MinkowskiForm(n)
    for a, b in pairs:
        out = out + minkowski_d(b).left_multiply(a)
    return out


# ---------------------------------------------------------------------------
# second exterior power
# ---------------------------------------------------------------------------

def _wedge_symbol(n: int, s, t):
    """tau_s ^ tau_t as (sign, label); sign 0 for s = t."""
    i, j = _sym_key(s, n), _sym_key(t, n)
    if i == j:
        return 0, None
    sign = 1 if i < j else -1
    i, j = min(i, j), max(i, j)
    return sign, (("tt", i, j) if j < n else ("ts", i))


def minkowski_wedge(u: MinkowskiForm, v: MinkowskiForm) -> MinkowskiTwoForm:
    """u ^ v with v's coefficients moved to the left and tau_s ^ tau_t = -tau_t ^ tau_s."""
    n = u.n
    out: dict = {}
    for s, c in u.terms.items():
        for t, e in v.terms.items():
            for s2, f in move_coefficient_left(s, e).terms.items():
                sign, lab = _wedge_symbol(n, s2, t)
                if sign:
                    val = (c * f).scale(sign)
                    out[lab] = out[lab] + val if lab in out else val
    return MinkowskiTwoForm(n, out)


def d_oneform(u: MinkowskiForm) -> MinkowskiTwoForm:
    """d(sum c_s tau_s) = sum dc_s ^ tau_s (every tau_s is closed)."""
    n = u.n
    out = MinkowskiTwoForm(n)
    for s, c in u.terms.items():
        out = out + minkowski_wedge(minkowski_d(c), MinkowskiForm.basis(n, s))
    return out


def right_coaction_matrix(n: int = 4) -> dict:
    """M_pj = sum pi_p(first leg of ad(b_j)) (second leg), as {(p, j): AlgebraElement}."""
    alg = minkowski(n)
    out: dict = {}
    for j, b in quotient_span(n).items():
        for (m1, m2), c in b.adjoint().terms.items():
            if m1 == UNIT:
                continue
            for p, v in pi(AlgebraElement(alg, {m1: ONE})).items():
                e = AlgebraElement(alg, {m2: c * v})
                out[(p, j)] = out[(p, j)] + e if (p, j) in out else e
    return {k: v for k, v in out.items() if v}


def derived_sigma(n: int = 4) -> dict:
    """sigma(tau_i (x) tau_j) = sum pi_n(b_i M_pj) tau_p (x) tau_n, keyed by (i, j)."""
    M = right_coaction_matrix(n)
    span = quotient_span(n)
    out = {}
    for i, bi in span.items():
        for j in span:
            img: dict = {}
            for (p, jj), m in M.items():
                if jj != j:
                    continue
                for k, v in pi(bi * m).items():
                    _acc(img, (p, k), v)
            out[(i, j)] = img
    return out


def derived_maurer_cartan(sym, n: int = 4) -> dict:
    """d tau_s = -sum pi(b_(1)) (x) pi(b_(2)) as {(s, t): Scalar} (tensor form)."""
    alg = minkowski(n)
    b = quotient_span(n)[sym]
    out: dict = {}
    for (m1, m2), c in b.coproduct().terms.items():
        if m1 == UNIT or m2 == UNIT:
            continue
        p1 = pi(AlgebraElement(alg, {m1: ONE}))
        p2 = pi(AlgebraElement(alg, {m2: ONE}))
        for s, v in p1.items():
            for t, w in p2.items():
                _acc(out, (s, t), -c * v * w)
    return out


def wedge_scalar_tensor(n: int, t: dict) -> dict:
    """Image of a scalar tensor {(s, t): c} in the second exterior power."""
    out: dict = {}
    for (s, u), c in t.items():
        sign, lab = _wedge_symbol(n, s, u)
        if sign:
            _acc(out, lab, c * sign)
    return out


# ---------------------------------------------------------------------------
# coactions of the group M on its forms
# ---------------------------------------------------------------------------

def _pair_coaction(n: int, pairs: list, leg: int) -> dict:
    """Delta_L (leg 0) or Delta_R (leg 1) of sum a db, keyed by the monomial of
    the algebra leg, valued in MinkowskiForm."""
    alg = minkowski(n)
    out: dict = {}
    for a, b in pairs:
        for (a1, a2), ca in a.coproduct().terms.items():
            for (b1, b2), cb in b.coproduct().terms.items():
                if leg == 0:
                    alg_part = AlgebraElement(alg, {a1: ONE}) * AlgebraElement(alg, {b1: ONE})
                    form = minkowski_d(AlgebraElement(alg, {b2: ONE})).left_multiply(AlgebraElement(alg, {a2: ca * cb}))
                else:
                    alg_part = AlgebraElement(alg, {a2: ONE}) * AlgebraElement(alg, {b2: ONE})
                    form = minkowski_d(AlgebraElement(alg, {b1: ONE})).left_multiply(AlgebraElement(alg, {a1: ca * cb}))
                if not form:
                    continue
                for m, c in alg_part.terms.items():
                    f = form.scale(c)
                    out[m] = out[m] + f if m in out else f
    return {m: f for m, f in out.items() if f}


def coaction_left(u: MinkowskiForm) -> dict:
    return _pair_coaction(u.n, differential_representation(u), 0)


def coaction_right(u: MinkowskiForm) -> dict:
    return _pair_coaction(u.n, differential_representation(u), 1)


# ---------------------------------------------------------------------------
# the kappa-Poincare action on M
# ---------------------------------------------------------------------------

def _algs(n: int):
    return poincare(n), minkowski(n)


@lru_cache(maxsize=None)
def _rho_word(n: int, w: tuple) -> TensorElement:
    P, M = _algs(n)
    out = TensorElement((P, M), {(UNIT, UNIT): ONE})
    for mu in w:
        terms = {(((P.var(mu, nu),), ()), ((), (nu,))): ONE for nu in range(n)}
        terms[(((), (mu,)), UNIT)] = ONE
        out = out * TensorElement((P, M), terms)
    return out


def rho(a: AlgebraElement) -> TensorElement:
    """rho(y^m) = L^m_n (x) y^n + x^m (x) I, extended multiplicatively."""
    n = a.alg.n
    P, M = _algs(n)
    out: dict = {}
    for (_, w), c in a.terms.items():
        for k, c2 in _rho_word(n, w).terms.items():
            _acc(out, k, c * c2)
    return TensorElement((P, M), out)


def rho_leg(n: int) -> _LegMap:
    P, M = _algs(n)
    return _LegMap(lambda m: _rho_word(n, m[1]).terms, (P, M))


def coaction_axioms(a: AlgebraElement) -> dict:
    """(I (x) rho) rho = (Delta (x) I) rho and (eps (x) I) rho = I."""
    n = a.alg.n
    P, _ = _algs(n)
    r = rho(a)
    lhs = r.map_leg(1, rho_leg(n))
    rhs = r.map_leg(0, coproduct_leg(P))
    coassoc = (lhs - rhs).is_zero()
    counit = r.map_leg(0, counit_leg(P))
    back = {(m,): c for m, c in a.terms.items()}
    return {"coassociative": coassoc, "counital": counit.terms == back}


def rho_relation_defect(n: int, mu: int, nu: int) -> TensorElement:
    """[rho(y^m), rho(y^n)] - (i/kappa)(d_0^m rho(y^n) - d_0^n rho(y^m))."""
    M = minkowski(n)
    rm, rn = rho(M.x(mu)), rho(M.x(nu))
    out = rm * rn - rn * rm
    if mu == 0:
        out = out - rn.scale(T)
    if nu == 0:
        out = out + rm.scale(T)
    return out


# ---------------------------------------------------------------------------
# the lifted action on M (x) M and the sub-bimodule N
# ---------------------------------------------------------------------------

def _embed(n: int, t: TensorElement, slot: int) -> TensorElement:
    """P (x) M -> P (x) M (x) M with the M leg in position ``slot``."""
    P, M = _algs(n)
    terms = {}
    for (p, m), c in t.terms.items():
        terms[(p, m, UNIT) if slot == 1 else (p, UNIT, m)] = c
    return TensorElement((P, M, M), terms)


def rho_tilde(q: TensorElement) -> TensorElement:
    """rho~(x (x) y) = sum a b (x) x' (x) y' for rho(x) = a (x) x', rho(y) = b (x) y'."""
    M = q.algs[0]
    n = M.n
    P, _ = _algs(n)
    out = TensorElement((P, M, M), {})
    for (m1, m2), c in q.terms.items():
        left = _embed(n, rho(AlgebraElement(M, {m1: c})), 1)
        right = _embed(n, rho(AlgebraElement(M, {m2: ONE})), 2)
        out = out + left * right
    return out


def n_generator(g_elem: AlgebraElement) -> TensorElement:
    """r^{-1}(I (x) g) = sum S(g_(1)) (x) g_(2)."""
    alg = g_elem.alg
    out: dict = {}
    for (m1, m2), c in g_elem.coproduct().terms.items():
        for s, c2 in alg.antipode_monomial(m1).items():
            _acc(out, (s, m2), c * c2)
    return TensorElement((alg, alg), out)


def r_map(q: TensorElement) -> TensorElement:
    """r(x (x) y) = sum x y_(1) (x) y_(2)."""
    alg = q.algs[0]
    out: dict = {}
    for (m1, m2), c in q.terms.items():
        for (b1, b2), c2 in alg.coproduct_monomial(m2).items():
            for m, c3 in alg.monomial_product(m1, b1).items():
                _acc(out, (m, b2), c * c2 * c3)
    return TensorElement((alg, alg), out)


def n_membership(q: TensorElement, max_degree: int = DEFAULT_DEGREE) -> Membership:
    """q in N iff m(q) = 0 and r(q) in M (x) R (first leg expanded in monomials)."""
    alg = q.algs[0]
    if q.legs_multiplied().terms:
        return Membership.OUT
    ideal = minkowski_ideal(alg.n)
    groups: dict = {}
    for (m1, m2), c in r_map(q).terms.items():
        groups.setdefault(m1, {})[m2] = c
    statuses = [ideal.membership(AlgebraElement(alg, t), max_degree) for t in groups.values()]
    if all(s is Membership.IN for s in statuses):
        return Membership.IN
    if any(s is Membership.OUT for s in statuses):
        return Membership.OUT
    return Membership.INCONCLUSIVE


def _p_leg_groups(t: TensorElement) -> dict:
    """Group a P (x) M (x) M element by its formal P monomial."""
    M = t.algs[1]
    groups: dict = {}
    for (p, a, b), c in t.terms.items():
        groups.setdefault(p, {})[(a, b)] = c
    return {p: TensorElement((M, M), d) for p, d in groups.items()}


def _p_leg_functionals(t: TensorElement) -> dict:
    """Evaluate the P leg at (sample point, translation word) functionals."""
    M = t.algs[1]
    pool = default_pool(M.n)
    groups: dict = {}
    for (p, a, b), c in t.terms.items():
        lam, w = p
        val = element_values(AlgebraElement(t.algs[0], {(lam, ()): c}), pool)
        for k, v in val.items():
            if v:
                d = groups.setdefault((k[0], w), {})
                _acc(d, (a, b), v)
    return {k: TensorElement((M, M), d) for k, d in groups.items() if d}


def rho_tilde_stability(n: int = 4, max_degree: int = DEFAULT_DEGREE) -> list[dict]:
    """rho~(n_g) in P (x) N for every ideal generator g."""
    results = []
    for lab, gen in ideal_generators(n):
        ng = n_generator(gen)
        base = n_membership(ng, max_degree)
        img = rho_tilde(ng)
        route = "formal"
        sts = [n_membership(q, max_degree) for q in _p_leg_groups(img).values()]
        if not all(s is Membership.IN for s in sts):
            route = "sampled"
            sts = [n_membership(q, max_degree) for q in _p_leg_functionals(img).values()]
        if all(s is Membership.IN for s in sts):
            st = Membership.IN
        elif any(s is Membership.OUT for s in sts):
            st = Membership.OUT
        else:
            st = Membership.INCONCLUSIVE
        results.append({
            "generator": lab,
            "in_N": base.value,
            "status": st.value if base is Membership.IN else "fail",
            "route": route,
        })
    return results


# ---------------------------------------------------------------------------
# the action on forms
# ---------------------------------------------------------------------------

def rho_tilde_on_pairs(n: int, pairs: list) -> dict:
    """sum rho(x_k) (I (x) d) rho(y_k), as {symbol: TensorElement(P, M)}.

    The value at symbol s is the P (x) M coefficient of I (x) tau_s."""
    P, M = _algs(n)
    out: dict = {}
    for a, b in pairs:
        ra = rho(a)
        dparts: dict = {}
        for (p, m), c in rho(b).terms.items():
            for s, e in minkowski_d(AlgebraElement(M, {m: c})).terms.items():
                d = dparts.setdefault(s, {})
                for mm, cc in e.terms.items():
                    _acc(d, (p, mm), cc)
        for s, d in dparts.items():
            v = ra * TensorElement((P, M), d)
            out[s] = out[s] + v if s in out else v
    return {s: v for s, v in out.items() if v.terms}


def rho_tilde_on_forms(u: MinkowskiForm) -> dict:
    return rho_tilde_on_pairs(u.n, differential_representation(u))


def expected_rho_tilde(n: int, sym) -> dict:
    """Lambda^m_n (x) tau^n for tau^m, and I (x) tau for tau."""
    P, M = _algs(n)
    if len(sym) == 2:
        return {("tau", nu): TensorElement.pure(P.L(sym[1], nu), M.one()) for nu in range(n)}
    return {("tau",): TensorElement.pure(P.one(), M.one())}


def form_tensor_equal(a: dict, b: dict) -> bool:
    for s in set(a) | set(b):
        ta, tb = a.get(s), b.get(s)
        if ta is None:
            ta = TensorElement(tb.algs, {})
        if tb is None:
            tb = TensorElement(ta.algs, {})
        if not (ta - tb).is_zero():
            return False
    return True


def omega_of(g_elem: AlgebraElement) -> list:
    """sum S(g_(1)) d g_(2) as a list of pairs."""
    alg = g_elem.alg
    return [
        (AlgebraElement(alg, alg.antipode_monomial(m1)).scale(c), AlgebraElement(alg, {m2: ONE}))
        for (m1, m2), c in g_elem.coproduct().terms.items()
    ]


def minkowski_normalize(e, n: int = 4) -> AlgebraElement:
    """Normal form of a kappa-Minkowski expression given as text, tree or element."""
    from .parser import Context, normalize

    return normalize(e, Context("minkowski", n))


def minkowski_hopf(a: AlgebraElement) -> dict:
    return {"coproduct": a.coproduct(), "antipode": a.antipode(), "counit": a.counit()}

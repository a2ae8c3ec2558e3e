"""The 15-dimensional bicovariant first-order calculus on the 4-dimensional
kappa-Poincare group, its second exterior power and exterior derivative.

Basis symbols (left-invariant 1-forms):

    ("w2", a, b)  omega^{ab}, a < b   (omega^{ba} = -omega^{ab}, indices up)
    ("w1", m)     omega^m
    ("w0",)       omega
    ("vp", m)     varpi_m             (index down)

Two routes are kept side by side.  The *tabulated* route encodes the
commutation rules between the basis forms and the generators, the
wedge relations among left-invariant forms and the Maurer-Cartan
equations as explicit formulas; d, wedge and the bimodule structure are
built on it.  The *derived* route rebuilds the same data from the
quotient map pi: ker(eps) -> ker(eps)/R (see :mod:`kpoincare.ideals`)
through the standard formulas of the bicovariant calculus of a right
ideal:

    omega(b) a      = sum a_(1) omega(b a_(2))
    Delta_R omega_j = sum_p omega_p (x) M_pj,  M_pj = sum pi_p(b_(2)) S(b_(1)) b_(3)
    sigma(omega_i (x) omega_j) = sum_{p,n} pi_n(b_i M_pj) omega_p (x) omega_n
    d omega(b)      = -sum omega(b_(1)) ^ omega(b_(2))

and is used only for verification.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .algebra import UNIT, AlgebraElement, TensorElement, poincare
from .forms import Form, SymbolSpace
from .ideals import jet_vector, poincare_quotient, poincare_quotient_span
from .linalg import Echelon
from .scalars import ONE, ZERO, T, Scalar, scalar
from .tensors import delta, eps_lower, eps_mixed, eps_upper, g

N = 4
R4 = range(N)
PAIRS = tuple((a, b) for a in R4 for b in R4 if a < b)
SYMBOLS = (
    tuple(("w2", a, b) for a, b in PAIRS)
    + tuple(("w1", m) for m in R4)
    + (("w0",),)
    + tuple(("vp", m) for m in R4)
)
_SYM_INDEX = {s: k for k, s in enumerate(SYMBOLS)}
KAPPA2_INV = -(T * T)  # 1/kappa^2 = -(i/kappa)^2


def symbol_text(sym) -> str:
    kind = sym[0]
    if kind == "w2":
        return f"omega^{{{sym[1]}{sym[2]}}}"
    if kind == "w1":
        return f"omega^{sym[1]}"
    if kind == "w0":
        return "omega"
    return f"varpi_{sym[1]}"


def symbol_latex(sym) -> str:
    kind = sym[0]
    if kind == "w2":
        return f"\\omega^{{{sym[1]}{sym[2]}}}"
    if kind == "w1":
        return f"\\omega^{{{sym[1]}}}"
    if kind == "w0":
        return "\\omega"
    return f"\\varpi_{{{sym[1]}}}"


class _OneFormSpace(SymbolSpace):
    name = "one-forms"

    def key(self, sym):
        return _SYM_INDEX[sym]

    def text(self, sym):
        return symbol_text(sym)

    def latex(self, sym):
        return symbol_latex(sym)


class _TensorSpace(SymbolSpace):
    name = "tensor-forms"

    def key(self, sym):
        return (_SYM_INDEX[sym[0]], _SYM_INDEX[sym[1]])

    def text(self, sym):
        return f"{symbol_text(sym[0])} (x) {symbol_text(sym[1])}"

    def latex(self, sym):
        return f"{symbol_latex(sym[0])} \\otimes {symbol_latex(sym[1])}"


# ---------------------------------------------------------------------------
# the 110 basis elements of the second exterior power
# ---------------------------------------------------------------------------

def _two_form_basis_labels() -> tuple:
    out = []
    for i, p in enumerate(PAIRS):
        for q in PAIRS[i + 1 :]:
            out.append(("ww", p, q))
    for p in PAIRS:
        out += [("wv", p, m) for m in R4]
    out += [("ws", p) for p in PAIRS]
    for p in PAIRS:
        out += [("wp", p, m) for m in R4]
    out += [("vv", a, m) for a in R4 for m in R4 if a < m]
    out += [("vs", a) for a in R4]
    out += [("vp", a, m) for a in R4 for m in R4]
    out += [("sp", m) for m in R4]
    out += [("pp", a, m) for a in R4 for m in R4 if a < m]
    out += [("X", m) for m in R4]
    out.append(("Y",))
    return tuple(out)


TWO_FORM_BASIS = _two_form_basis_labels()
_TWO_INDEX = {s: k for k, s in enumerate(TWO_FORM_BASIS)}


def _pair_text(p) -> str:
    return f"{p[0]}{p[1]}"


def two_symbol_text(lab) -> str:
    kind = lab[0]
    if kind == "ww":
        return f"omega^{{{_pair_text(lab[1])}}}/\\omega^{{{_pair_text(lab[2])}}}"
    if kind == "wv":
        return f"omega^{{{_pair_text(lab[1])}}}/\\omega^{lab[2]}"
    if kind == "ws":
        return f"omega^{{{_pair_text(lab[1])}}}/\\omega"
    if kind == "wp":
        return f"omega^{{{_pair_text(lab[1])}}}/\\varpi^{lab[2]}"
    if kind == "vv":
        return f"omega^{lab[1]}/\\omega^{lab[2]}"
    if kind == "vs":
        return f"omega^{lab[1]}/\\omega"
    if kind == "vp":
        return f"omega^{lab[1]}/\\varpi^{lab[2]}"
    if kind == "sp":
        return f"omega/\\varpi^{lab[1]}"
    if kind == "pp":
        return f"varpi^{lab[1]}/\\varpi^{lab[2]}"
    if kind == "X":
        return f"X_{lab[1]}"
    return "Y"


def two_symbol_latex(lab) -> str:
    kind = lab[0]
    w = "\\wedge"
    if kind == "ww":
        return f"\\omega^{{{_pair_text(lab[1])}}} {w} \\omega^{{{_pair_text(lab[2])}}}"
    if kind == "wv":
        return f"\\omega^{{{_pair_text(lab[1])}}} {w} \\omega^{{{lab[2]}}}"
    if kind == "ws":
        return f"\\omega^{{{_pair_text(lab[1])}}} {w} \\omega"
    if kind == "wp":
        return f"\\omega^{{{_pair_text(lab[1])}}} {w} \\varpi^{{{lab[2]}}}"
    if kind == "vv":
        return f"\\omega^{{{lab[1]}}} {w} \\omega^{{{lab[2]}}}"
    if kind == "vs":
        return f"\\omega^{{{lab[1]}}} {w} \\omega"
    if kind == "vp":
        return f"\\omega^{{{lab[1]}}} {w} \\varpi^{{{lab[2]}}}"
    if kind == "sp":
        return f"\\omega {w} \\varpi^{{{lab[1]}}}"
    if kind == "pp":
        return f"\\varpi^{{{lab[1]}}} {w} \\varpi^{{{lab[2]}}}"
    if kind == "X":
        return f"X_{{{lab[1]}}}"
    return "Y"


class _TwoFormSpace(SymbolSpace):
    name = "two-forms"

    def key(self, sym):
        return _TWO_INDEX[sym]

    def text(self, sym):
        return two_symbol_text(sym)

    def latex(self, sym):
        return two_symbol_latex(sym)


ONE_FORMS = _OneFormSpace()
TENSOR_FORMS = _TensorSpace()
TWO_FORMS = _TwoFormSpace()


# ---------------------------------------------------------------------------
# scalar combinations of basis forms, with index gymnastics
# ---------------------------------------------------------------------------

def omega_uu(m: int, n: int) -> dict:
    """omega^{mn} (antisymmetric)."""
    if m == n:
        return {}
    return {("w2", m, n): ONE} if m < n else {("w2", n, m): -ONE}


def _sc(d: dict, c) -> dict:
    c = scalar(c)
    return {k: v * c for k, v in d.items()} if c else {}


def omega_ul(m: int, n: int) -> dict:
    """omega^m_n = omega^{m r} g_{r n}."""
    return _sc(omega_uu(m, n), g(n))


def omega_lu(s: int, m: int) -> dict:
    """omega_s^m = g_{s r} omega^{r m}."""
    return _sc(omega_uu(s, m), g(s))


def omega_ll(a: int, b: int) -> dict:
    return _sc(omega_uu(a, b), g(a) * g(b))


def omega_vec(m: int) -> dict:
    return {("w1", m): ONE}


def omega_vec_low(m: int) -> dict:
    return {("w1", m): scalar(g(m))}


OMEGA = {("w0",): ONE}


def varpi(m: int) -> dict:
    """varpi_m (index down)."""
    return {("vp", m): ONE}


def varpi_up(m: int) -> dict:
    return {("vp", m): scalar(g(m))}


def tensor(a: dict, b: dict) -> dict:
    """Formal tensor product of two scalar combinations of basis forms."""
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            v = out.get((i, j), ZERO) + x * y
            if v:
                out[(i, j)] = v
            else:
                out.pop((i, j), None)
    return out


def combine(*terms) -> dict:
    """sum c * d over (c, d) pairs of scalars and dicts."""
    out: dict = {}
    for c, d in terms:
        c = scalar(c)
        if not c:
            continue
        for k, v in d.items():
            nv = out.get(k, ZERO) + c * v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


# ---------------------------------------------------------------------------
# forms
# ---------------------------------------------------------------------------

class OneForm(Form):
    """Element of the bimodule of 1-forms, sum_s c_s omega_s."""

    def __init__(self, terms: dict | None = None):
        super().__init__(calculus_algebra(), ONE_FORMS, terms)

    @classmethod
    def basis(cls, sym) -> OneForm:
        if sym not in _SYM_INDEX:
            raise KeyError(f"unknown form symbol {sym!r}")
        return cls({sym: calculus_algebra().one()})

    @classmethod
    def of(cls, coeffs: dict) -> OneForm:
        alg = calculus_algebra()
        return cls({s: alg.const(c) for s, c in coeffs.items()})

    def right_multiply(self, a: AlgebraElement) -> OneForm:
        out: dict = {}
        for s, c in self.terms.items():
            for s2, c2 in move_coefficient_left(s, a).terms.items():
                v = c * c2
                out[s2] = out[s2] + v if s2 in out else v
        return OneForm(out)


class TensorForm(Form):
    """Element of Gamma (x)_A Gamma, sum c_{ij} omega_i (x) omega_j."""

    def __init__(self, terms: dict | None = None):
        super().__init__(calculus_algebra(), TENSOR_FORMS, terms)

    @classmethod
    def of(cls, coeffs: dict) -> TensorForm:
        alg = calculus_algebra()
        return cls({s: alg.const(c) for s, c in coeffs.items()})

    def right_multiply(self, a: AlgebraElement) -> TensorForm:
        out: dict = {}
        for (i, j), c in self.terms.items():
            for k, e in move_coefficient_left(j, a).terms.items():
                for s, f in move_coefficient_left(i, e).terms.items():
                    v = c * f
                    out[(s, k)] = out[(s, k)] + v if (s, k) in out else v
        return TensorForm(out)


class TwoForm(Form):
    """Element of the second exterior power over the 110-element basis."""

    def __init__(self, terms: dict | None = None):
        super().__init__(calculus_algebra(), TWO_FORMS, terms)

    @classmethod
    def of(cls, coeffs: dict) -> TwoForm:
        alg = calculus_algebra()
        return cls({s: alg.const(c) for s, c in coeffs.items()})


def calculus_algebra():
    return poincare(N)


def _require_n4(a: AlgebraElement) -> None:
    if a.alg is not calculus_algebra():
        raise ValueError("the differential calculus is defined on the 4-dimensional kappa-Poincare algebra")


# ---------------------------------------------------------------------------
# tabulated commutation rules  [a, omega_s] for generators a
# ---------------------------------------------------------------------------

def _split(m):
    """First generator of a normal monomial and the remaining monomial."""
    lam, word = m
    if lam:
        return ("L",) + divmod(lam[0], N), (lam[1:], word)
    return ("x", word[0]), ((), word[1:])


def _gen_element(gen) -> AlgebraElement:
    P = calculus_algebra()
    return P.L(gen[1], gen[2]) if gen[0] == "L" else P.x(gen[1])


def _acc_form(out: dict, coeff: AlgebraElement, d: dict) -> None:
    for k, v in d.items():
        e = coeff.scale(v)
        if k in out:
            e = out[k] + e
        if e.terms:
            out[k] = e
        else:
            out.pop(k, None)


def _L_upper(P, m, n) -> AlgebraElement:
    return P.L(m, n) * g(n)


@lru_cache(maxsize=None)
def generator_commutator(gen: tuple, sym: tuple) -> OneForm:
    """[a, omega_s] for a generator a = ("x", m) or ("L", m, n)."""
    P = calculus_algebra()
    L = P.L
    kind = sym[0]
    out: dict = {}
    acc = lambda c, d: _acc_form(out, c, d)  # noqa: E731
    if kind == "w2":
        if gen[0] == "L":
            return OneForm()
        (a,) = gen[1:]
        m, n = sym[1], sym[2]
        pre = g(n)  # omega^{mn} = g^{nn} omega^m_n
        for r in R4:
            if n == 0:
                acc(L(a, r).scale(-T * pre), omega_uu(m, r))
            if m == 0:
                acc(L(a, r).scale(-T * pre), omega_ul(r, n))
        acc(L(a, n).scale(T * pre), omega_ul(m, 0))
        acc(_L_upper(P, a, m).scale(T * pre), omega_ul(0, n))
        for r, c in itertools.product(R4, repeat=2):
            e = eps_mixed("ulu u", m, n, r, c)
            if e:
                acc(L(a, r).scale(-scalar(e * pre) / 6), varpi(c))
    elif kind == "w1":
        al = sym[1]
        if gen[0] == "L":
            m, n = gen[1:]
            for r in R4:
                if n == 0:
                    acc(L(m, r).scale(-T), omega_uu(r, al))
            acc(L(m, 0).scale(-T), omega_ul(al, n))
            for r, c in itertools.product(R4, repeat=2):
                e = eps_mixed("ulu u", r, n, al, c)
                if e:
                    acc(L(m, r).scale(-scalar(e) / 6), varpi(c))
        else:
            (m,) = gen[1:]
            acc(_L_upper(P, m, al).scale(-scalar(1) / 4), OMEGA)
            acc(_L_upper(P, m, al).scale(T), omega_vec(0))
            if al == 0:
                for b in R4:
                    acc(L(m, b).scale(-T), omega_vec(b))
    elif kind == "w0":
        four = 4 * KAPPA2_INV
        if gen[0] == "L":
            m, n = gen[1:]
            for r in R4:
                acc(L(m, r).scale(four), omega_ul(r, n))
        else:
            (m,) = gen[1:]
            for r in R4:
                acc(L(m, r).scale(four), omega_vec(r))
    elif kind == "vp":
        if gen[0] == "L":
            return OneForm()
        (a,) = gen[1:]
        mu = sym[1]
        three = 3 * KAPPA2_INV
        for b, r, t in itertools.product(R4, repeat=3):
            e = eps_lower(mu, b, r, t)
            if e:
                acc(_L_upper(P, a, b).scale(three * e), omega_uu(r, t))
        if mu == 0:
            for b in R4:
                acc(_L_upper(P, a, b).scale(-T), varpi(b))
        acc(L(a, mu).scale(T), varpi(0))
    else:
        raise KeyError(sym)
    return OneForm(out)


_MOVE_MEMO: dict = {}


def _move_monomial(sym, m) -> dict:
    """omega_sym * m as {sym: AlgebraElement}."""
    if m == UNIT:
        return {sym: calculus_algebra().one()}
    key = (sym, m)
    out = _MOVE_MEMO.get(key)
    if out is not None:
        return out
    gen, rest = _split(m)
    a = _gen_element(gen)
    # omega a = a omega - [a, omega]
    first = {sym: a}
    for s, c in generator_commutator(gen, sym).terms.items():
        first[s] = first[s] - c if s in first else -c
    out = {}
    rest_is_unit = rest == UNIT
    for s, c in first.items():
        if not c.terms:
            continue
        if rest_is_unit:
            moved = {s: calculus_algebra().one()}
        else:
            moved = _move_monomial(s, rest)
        for s2, c2 in moved.items():
            v = c * c2
            if s2 in out:
                v = out[s2] + v
            if v.terms:
                out[s2] = v
            else:
                out.pop(s2, None)
    _MOVE_MEMO[key] = out
    return out


def move_coefficient_left(sym, a: AlgebraElement) -> OneForm:
    """Normal form of omega_sym * a as sum (left coefficient) * omega."""
    if not isinstance(a, AlgebraElement):
        a = calculus_algebra().const(a)
    _require_n4(a)
    out: dict = {}
    for m, c in a.terms.items():
        for s, e in _move_monomial(sym, m).items():
            v = e.scale(c)
            if s in out:
                v = out[s] + v
            if v.terms:
                out[s] = v
            else:
                out.pop(s, None)
    return OneForm(out)


def move_through_generators(sym, gens: list) -> OneForm:
    """omega_sym * (g_1 g_2 ... g_k) by moving past one generator at a time,
    in the given (not necessarily normal) order."""
    form = OneForm.basis(sym)
    for gen in gens:
        out = OneForm()
        for s, c in form.terms.items():
            out = out + c * move_coefficient_left(s, _gen_element(gen))
        form = out
    return form


# ---------------------------------------------------------------------------
# exterior derivative on the algebra
# ---------------------------------------------------------------------------

def _d_generator(gen) -> dict:
    P = calculus_algebra()
    out: dict = {}
    if gen[0] == "x":
        a = gen[1]
        for m in R4:
            _acc_form(out, P.L(a, m), omega_vec(m))
    else:
        a, n = gen[1:]
        for m in R4:
            _acc_form(out, P.L(a, m), omega_ul(m, n))
    return out


_D_MEMO: dict = {}


def _d_monomial(m) -> dict:
    if m == UNIT:
        return {}
    out = _D_MEMO.get(m)
    if out is not None:
        return out
    gen, rest = _split(m)
    out = {}
    for s, c in _d_generator(gen).items():
        moved = {s: calculus_algebra().one()} if rest == UNIT else _move_monomial(s, rest)
        for s2, c2 in moved.items():
            v = c * c2
            if s2 in out:
                v = out[s2] + v
            if v.terms:
                out[s2] = v
            else:
                out.pop(s2, None)
    a = _gen_element(gen)
    for s, c in _d_monomial(rest).items():
        v = a * c
        if s in out:
            v = out[s] + v
        if v.terms:
            out[s] = v
        else:
            out.pop(s, None)
    _D_MEMO[m] = out
    return out


def d_algebra(a: AlgebraElement) -> OneForm:
    """da with every coefficient on the left of the basis forms."""
    _require_n4(a)
    out: dict = {}
    for m, c in a.terms.items():
        for s, e in _d_monomial(m).items():
            v = e.scale(c)
            if s in out:
                v = out[s] + v
            if v.terms:
                out[s] = v
            else:
                out.pop(s, None)
    return OneForm(out)


# ---------------------------------------------------------------------------
# wedge relations and the reduction table
# ---------------------------------------------------------------------------

def x_form(mu: int) -> dict:
    """The tensor X_mu spanning the five extra basis directions (with Y)."""
    out: dict = {}
    for r, s, d in itertools.product(R4, repeat=3):
        e = eps_lower(mu, r, s, d)
        if not e:
            continue
        terms = [
            (1, tensor(omega_vec(r), omega_uu(s, d))),
            (1, tensor(omega_uu(s, d), omega_vec(r))),
            (T, tensor(omega_uu(s, 0), omega_uu(r, d))),
            (T, tensor(omega_uu(0, d), omega_uu(r, s))),
        ]
        for lam in R4:
            if d == 0:
                terms.append((T, tensor(omega_uu(s, lam), omega_lu(lam, r))))
            if s == 0:
                terms.append((T, tensor(omega_uu(lam, d), omega_lu(lam, r))))
        out = combine((1, out), (e, combine(*terms)))
    return out


def y_form() -> dict:
    terms = []
    for r in R4:
        terms.append((1, tensor(varpi_up(r), omega_vec_low(r))))
        terms.append((1, tensor(omega_vec_low(r), varpi_up(r))))
        terms.append((T, tensor(varpi(r), omega_uu(r, 0))))
    return combine(*terms)


def wedge_relations() -> list[tuple[str, dict]]:
    """The quadratic relations among left-invariant forms, as tensors that
    vanish in the exterior square (120 relations, 115 independent)."""
    rels = []
    four = 4 * KAPPA2_INV
    rels.append(("omega-omega", tensor(OMEGA, OMEGA)))
    for i, p in enumerate(PAIRS):
        for q in PAIRS[i:]:
            rels.append((
                f"lorentz-lorentz[{_pair_text(p)},{_pair_text(q)}]",
                combine((1, tensor(omega_uu(*p), omega_uu(*q))), (1, tensor(omega_uu(*q), omega_uu(*p)))),
            ))
    for a in R4:
        for p in PAIRS:
            rels.append((
                f"varpi-lorentz[{a};{_pair_text(p)}]",
                combine((1, tensor(varpi(a), omega_uu(*p))), (1, tensor(omega_uu(*p), varpi(a)))),
            ))
    for m in R4:
        for n in R4:
            if m <= n:
                rels.append((
                    f"varpi-varpi[{m},{n}]",
                    combine((1, tensor(varpi(m), varpi(n))), (1, tensor(varpi(n), varpi(m)))),
                ))
    for m, n in PAIRS:
        # relation for omega^m_n, multiplied by g^{nn} to get the omega^{mn} form
        terms = [(1, tensor(omega_uu(m, n), OMEGA)), (1, tensor(OMEGA, omega_uu(m, n)))]
        terms += [(-four * g(n), tensor(omega_ul(s, n), omega_lu(s, m))) for s in R4]
        rels.append((f"lorentz-omega[{m}{n}]", combine(*terms)))
    for m in R4:
        terms = [(1, tensor(OMEGA, omega_vec(m))), (1, tensor(omega_vec(m), OMEGA))]
        terms += [(-four, tensor(omega_ul(m, s), omega_vec(s))) for s in R4]
        rels.append((f"omega-vector[{m}]", combine(*terms)))
    for m in R4:
        for n in R4:
            if m > n:
                continue
            terms = [(1, tensor(omega_vec(m), omega_vec(n))), (1, tensor(omega_vec(n), omega_vec(m)))]
            for r in R4:
                terms.append((T * delta(0, n), tensor(omega_ul(m, r), omega_vec(r))))
                terms.append((T * delta(0, m), tensor(omega_ul(n, r), omega_vec(r))))
            rels.append((f"vector-vector[{m},{n}]", combine(*terms)))
    xs = {b: x_form(b) for b in R4}
    for a in R4:
        for m, n in PAIRS:
            terms = [
                (1, tensor(omega_vec(a), omega_uu(m, n))),
                (1, tensor(omega_uu(m, n), omega_vec(a))),
                (T, tensor(omega_uu(m, 0), omega_uu(a, n))),
                (T, tensor(omega_uu(0, n), omega_uu(a, m))),
            ]
            for s in R4:
                terms.append((T * delta(0, n), tensor(omega_uu(m, s), omega_lu(s, a))))
                terms.append((T * delta(0, m), tensor(omega_uu(s, n), omega_lu(s, a))))
            for b in R4:
                e = eps_upper(a, m, n, b)
                if e:
                    terms.append((-scalar(e) / 6, xs[b]))
            rels.append((f"vector-lorentz[{a};{m}{n}]", combine(*terms)))
    for m in R4:
        terms = [(1, tensor(varpi(m), OMEGA)), (1, tensor(OMEGA, varpi(m))), (-four, xs[m])]
        terms += [(-four, tensor(varpi(s), omega_ul(s, m))) for s in R4]
        rels.append((f"varpi-omega[{m}]", combine(*terms)))
    yv = y_form()
    for m in R4:
        for a in R4:
            terms = [
                (1, tensor(omega_vec(m), varpi_up(a))),
                (1, tensor(varpi_up(a), omega_vec(m))),
                (T, tensor(varpi(0), omega_uu(m, a))),
                (-scalar(g(m, a)) / 4, yv),
            ]
            for r in R4:
                terms.append((T * delta(0, a), tensor(varpi(r), omega_uu(r, m))))
            for r, s in itertools.product(R4, repeat=2):
                e = eps_upper(a, m, r, s)
                if e:
                    terms.append((scalar(e) / 12, tensor(varpi(r), varpi(s))))
            for s, lam, t in itertools.product(R4, repeat=3):
                e = eps_upper(a, s, lam, t)
                if e:
                    terms.append((-KAPPA2_INV * e * scalar(3) / 2, tensor(omega_ul(m, s), omega_ll(lam, t))))
            rels.append((f"vector-varpi[{m},{a}]", combine(*terms)))
    return rels


def two_form_basis_tensors() -> dict:
    """Representative tensors of the 110 basis elements."""
    out = {}
    xs = {b: x_form(b) for b in R4}
    for lab in TWO_FORM_BASIS:
        kind = lab[0]
        if kind == "ww":
            t = tensor(omega_uu(*lab[1]), omega_uu(*lab[2]))
        elif kind == "wv":
            t = tensor(omega_uu(*lab[1]), omega_vec(lab[2]))
        elif kind == "ws":
            t = tensor(omega_uu(*lab[1]), OMEGA)
        elif kind == "wp":
            t = tensor(omega_uu(*lab[1]), varpi_up(lab[2]))
        elif kind == "vv":
            t = tensor(omega_vec(lab[1]), omega_vec(lab[2]))
        elif kind == "vs":
            t = tensor(omega_vec(lab[1]), OMEGA)
        elif kind == "vp":
            t = tensor(omega_vec(lab[1]), varpi_up(lab[2]))
        elif kind == "sp":
            t = tensor(OMEGA, varpi_up(lab[1]))
        elif kind == "pp":
            t = tensor(varpi_up(lab[1]), varpi_up(lab[2]))
        elif kind == "X":
            t = xs[lab[1]]
        else:
            t = y_form()
        out[lab] = t
    return out


def _tensor_priority(c):
    return (_SYM_INDEX[c[0]], _SYM_INDEX[c[1]])


class WedgeReductionTable:
    """Expansion of every omega_i (x) omega_j in the 110-element basis."""

    def __init__(self):
        ech = Echelon(_tensor_priority)
        self.relations = wedge_relations()
        for _, rel in self.relations:
            ech.add(rel)
        self.relation_rank = ech.rank
        self.basis = two_form_basis_tensors()
        dependent = [lab for lab, t in self.basis.items() if ech.add(t, {lab: ONE}) is None]
        if dependent or ech.rank != len(SYMBOLS) ** 2:
            raise RuntimeError(f"two-form basis is not complementary to the relations: {dependent}")
        self._ech = ech
        self.table = {}
        for i in SYMBOLS:
            for j in SYMBOLS:
                self.table[(i, j)] = self.reduce({(i, j): ONE})

    @property
    def basis_count(self) -> int:
        return len(self.basis)

    def reduce(self, t: dict) -> dict:
        res, acc = self._ech.reduce(t)
        if res:
            raise RuntimeError("tensor did not reduce into the two-form basis")
        return acc

    def reduce_fast(self, t: dict) -> dict:
        out: dict = {}
        for k, c in t.items():
            for lab, v in self.table[k].items():
                nv = out.get(lab, ZERO) + c * v
                if nv:
                    out[lab] = nv
                else:
                    out.pop(lab, None)
        return out


@lru_cache(maxsize=1)
def wedge_table() -> WedgeReductionTable:
    return WedgeReductionTable()


def reduce_tensor_form(t: TensorForm) -> TwoForm:
    table = wedge_table().table
    out: dict = {}
    for k, c in t.terms.items():
        for lab, v in table[k].items():
            e = c.scale(v)
            if lab in out:
                e = out[lab] + e
            if e.terms:
                out[lab] = e
            else:
                out.pop(lab, None)
    return TwoForm(out)


def tensor_forms(u: OneForm, v: OneForm) -> TensorForm:
    """u (x)_A v with all coefficients moved to the far left."""
    out: dict = {}
    for i, a in u.terms.items():
        for j, b in v.terms.items():
            for k, e in move_coefficient_left(i, b).terms.items():
                c = a * e
                key = (k, j)
                if key in out:
                    c = out[key] + c
                if c.terms:
                    out[key] = c
                else:
                    out.pop(key, None)
    return TensorForm(out)


def wedge(u: OneForm, v: OneForm) -> TwoForm:
    return reduce_tensor_form(tensor_forms(u, v))


# ---------------------------------------------------------------------------
# Maurer-Cartan equations and d on 1-forms
# ---------------------------------------------------------------------------

def maurer_cartan_tensor(sym) -> dict:
    """d omega_sym as a tensor of left-invariant forms (tabulated)."""
    kind = sym[0]
    if kind == "w2":
        m, n = sym[1], sym[2]
        return combine(*[(g(n), tensor(omega_lu(s, m), omega_ul(s, n))) for s in R4])
    if kind == "w1":
        m = sym[1]
        return combine(*[(1, tensor(omega_lu(s, m), omega_vec(s))) for s in R4])
    if kind == "w0":
        return {}
    m = sym[1]
    return combine((-1, x_form(m)), *[(-g(m), tensor(omega_uu(m, r), varpi(r))) for r in R4])


@lru_cache(maxsize=None)
def maurer_cartan(sym) -> TwoForm:
    return TwoForm.of(wedge_table().reduce(maurer_cartan_tensor(sym)))


def d_oneform(u: OneForm) -> TwoForm:
    """d(sum c_s omega_s) = sum dc_s ^ omega_s + c_s d omega_s."""
    table = wedge_table().table
    out: dict = {}

    def acc(lab, e):
        if lab in out:
            e = out[lab] + e
        if e.terms:
            out[lab] = e
        else:
            out.pop(lab, None)

    for s, c in u.terms.items():
        for k, e in d_algebra(c).terms.items():
            for lab, v in table[(k, s)].items():
                acc(lab, e.scale(v))
        for lab, v in maurer_cartan(s).terms.items():
            acc(lab, c * v)
    return TwoForm(out)


# ---------------------------------------------------------------------------
# right-invariant forms
# ---------------------------------------------------------------------------

def lorentz_determinant() -> AlgebraElement:
    """det(Lambda^mu_nu); equal to +1 or -1 on each component of O(1,3)."""
    P = calculus_algebra()
    out = P.zero()
    for perm in itertools.permutations(R4):
        e = eps_upper(*perm)
        term = P.const(e)
        for r, c in zip(R4, perm):
            term = term * P.L(r, c)
        out = out + term
    return out


@lru_cache(maxsize=2)
def right_invariant_forms(oriented: bool = True) -> dict:
    """Right-invariant forms keyed like the left-invariant symbols:
    ("w2", a, b) -> eta^{ab} = g^{bb} eta^a_b, ("w1", m) -> eta^m,
    ("w0",) -> eta, ("vp", m) -> theta_m.

    varpi transforms as an axial vector, so theta_m = varpi_n Lambda_m^n
    is right-invariant only where det Lambda = 1; with ``oriented`` the
    factor det Lambda is included and theta_m is right-invariant on the
    whole Lorentz group.
    """
    P = calculus_algebra()
    L, Lt, x = P.L, P.L_low_up, P.x
    out = {}

    def eta_mixed(m, n):
        f = OneForm()
        for b, c in itertools.product(R4, repeat=2):
            f = f + OneForm.of(omega_ul(b, c)) * (L(m, b) * Lt(n, c))
        return f

    for m, n in PAIRS:
        out[("w2", m, n)] = eta_mixed(m, n).scale(g(n))
    for m in R4:
        f = OneForm()
        for b, c, r in itertools.product(R4, repeat=3):
            f = f - OneForm.of(omega_ul(b, c)) * (Lt(r, c) * x(r) * L(m, b))
        for b in R4:
            f = f + OneForm.of(omega_vec(b)) * L(m, b)
        out[("w1", m)] = f
    out[("w0",)] = OneForm.of(OMEGA)
    det = lorentz_determinant() if oriented else P.one()
    for m in R4:
        f = OneForm()
        for n in R4:
            f = f + OneForm.of(varpi(n)) * (Lt(m, n) * det)
        out[("vp", m)] = f
    return out


# ---------------------------------------------------------------------------
# derived data (Woronowicz route)
# ---------------------------------------------------------------------------

def pi_coordinates(a: AlgebraElement) -> dict:
    """pi(a - eps(a)) in the basis of left-invariant forms."""
    return poincare_quotient().coordinates(a)


def _mono(m) -> AlgebraElement:
    return AlgebraElement(calculus_algebra(), {m: ONE})


def derived_commutator(gen, sym) -> OneForm:
    """[a, omega_s] from omega(b) a = sum a_(1) omega(b a_(2))."""
    P = calculus_algebra()
    b = poincare_quotient_span()[sym]
    out: dict = {}
    if gen[0] == "x":
        (mu,) = gen[1:]
        for nu in R4:
            _acc_form(out, -P.L(mu, nu), pi_coordinates(b * P.x(nu)))
    else:
        mu, nu = gen[1:]
        for r in R4:
            _acc_form(out, -P.L(mu, r), pi_coordinates(b * P.A(r, nu)))
    return OneForm(out)


def derived_move(sym, a: AlgebraElement) -> OneForm:
    """omega_s a = sum a_(1) pi(b_s a_(2)) directly (needs deg a <= 2)."""
    b = poincare_quotient_span()[sym]
    out: dict = {}
    for (m1, m2), c in a.coproduct().terms.items():
        _acc_form(out, _mono(m1).scale(c), pi_coordinates(b * _mono(m2)))
    return OneForm(out)


def _jet_representative(e: AlgebraElement) -> AlgebraElement:
    P = calculus_algebra()
    out = P.zero()
    for (k, w), c in jet_vector(e).items():
        m = AlgebraElement(P, {((), w): c})
        out = out + (P.A(*k) * m if k else m)
    return out


@lru_cache(maxsize=1)
def right_coaction_matrix() -> dict:
    """M[(p, j)] with Delta_R omega_j = sum_p omega_p (x) M_pj."""
    span = poincare_quotient_span()
    out = {}
    for j in SYMBOLS:
        acc: dict = {}
        for (m1, m2), c in span[j].adjoint().terms.items():
            for p, v in pi_coordinates(_mono(m1)).items():
                e = AlgebraElement(calculus_algebra(), {m2: c * v})
                acc[p] = acc[p] + e if p in acc else e
        for p, v in acc.items():
            if v.terms:
                out[(p, j)] = v
    return out


@lru_cache(maxsize=1)
def sigma_table() -> dict:
    """sigma(omega_i (x) omega_j) = sum sigma_table[(i, j)][(p, n)] omega_p (x) omega_n."""
    span = poincare_quotient_span()
    M = {k: _jet_representative(v) for k, v in right_coaction_matrix().items()}
    table: dict = {(i, j): {} for i in SYMBOLS for j in SYMBOLS}
    for i in SYMBOLS:
        for (p, j), m in M.items():
            if not m.terms:
                continue
            row = table[(i, j)]
            for n, v in pi_coordinates(span[i] * m).items():
                nv = row.get((p, n), ZERO) + v
                if nv:
                    row[(p, n)] = nv
                else:
                    row.pop((p, n), None)
    return table


def sigma_scalar(t: dict) -> dict:
    table = sigma_table()
    out: dict = {}
    for k, c in t.items():
        for k2, v in table[k].items():
            nv = out.get(k2, ZERO) + c * v
            if nv:
                out[k2] = nv
            else:
                out.pop(k2, None)
    return out


def sigma(t: TensorForm) -> TensorForm:
    """The bimodule braiding on Gamma (x)_A Gamma (left-linear)."""
    table = sigma_table()
    out: dict = {}
    for k, c in t.terms.items():
        for k2, v in table[k].items():
            e = c.scale(v)
            if k2 in out:
                e = out[k2] + e
            if e.terms:
                out[k2] = e
            else:
                out.pop(k2, None)
    return TensorForm(out)


def derived_maurer_cartan_tensor(sym) -> dict:
    """d omega(b) = -sum omega(b_(1)) (x) omega(b_(2)) as a tensor."""
    b = poincare_quotient_span()[sym]
    out: dict = {}
    for (m1, m2), c in b.coproduct().terms.items():
        t = tensor(pi_coordinates(_mono(m1)), pi_coordinates(_mono(m2)))
        out = combine((1, out), (-c, t))
    return out


def differential_representation(u: OneForm) -> list:
    """Pairs (a, b) with u = sum a db, from omega(c) = sum S(c_(1)) dc_(2)."""
    span = poincare_quotient_span()
    pairs = []
    for s, coeff in u.terms.items():
        for (m1, m2), c in span[s].coproduct().terms.items():
            pairs.append((coeff * _mono(m1).antipode().scale(c), _mono(m2)))
    return pairs


def _group_by_monomial(pairs: list) -> dict:
    """{monomial m of b: sum of c * a} for the pairs (a, b)."""
    out: dict = {}
    for a, b in pairs:
        for m, c in b.terms.items():
            e = a.scale(c)
            out[m] = out[m] + e if m in out else e
    return {m: a for m, a in out.items() if a.terms}


def _coaction(pairs: list, leg: int) -> dict:
    P = calculus_algebra()
    out: dict = {}
    for m, a in _group_by_monomial(pairs).items():
        inner: dict = {}
        for (b1, b2), c in P.coproduct_monomial(m).items():
            fixed, moving = (b1, b2) if leg == 1 else (b2, b1)
            for s, e in _d_monomial(moving).items():
                fe = AlgebraElement(P, {fixed: c})
                t = TensorElement.pure(fe, e) if leg == 1 else TensorElement.pure(e, fe)
                inner[s] = inner[s] + t if s in inner else t
        da = a.coproduct()
        for s, t in inner.items():
            v = da * t
            out[s] = out[s] + v if s in out else v
    return {s: t for s, t in out.items() if t.terms}


def coaction_left_pairs(pairs: list) -> dict:
    """sum Delta(a) (id (x) d) Delta(b) as {symbol: TensorElement}, meaning
    sum_s T_s * (I (x) omega_s) with the second leg as left coefficient."""
    return _coaction(pairs, 1)


def coaction_right_pairs(pairs: list) -> dict:
    """sum Delta(a) (d (x) id) Delta(b) as {symbol: TensorElement}, meaning
    sum_s T_s * (omega_s (x) I) with the first leg as left coefficient."""
    return _coaction(pairs, 0)


def coaction_left_basis(sym) -> dict:
    """Left coaction of a basis form through its a.db representation."""
    return coaction_left_pairs(differential_representation(OneForm.basis(sym)))


def coaction_right_basis(sym) -> dict:
    """Right coaction of a basis form through its a.db representation."""
    return coaction_right_pairs(differential_representation(OneForm.basis(sym)))


def _multiplicative(u: OneForm, images) -> dict:
    out: dict = {}
    for s, c in u.terms.items():
        dc = c.coproduct()
        for k, t in images(s).items():
            v = dc * t
            out[k] = out[k] + v if k in out else v
    return {k: t for k, t in out.items() if t.terms}


def coaction_left(u: OneForm) -> dict:
    """Delta_L(sum c_s omega_s) = sum Delta(c_s) (I (x) omega_s), using the
    left invariance of the basis (checked by :func:`verify_left_invariance`)."""
    P = calculus_algebra()
    one = TensorElement.pure(P.one(), P.one())
    return _multiplicative(u, lambda s: {s: one})


def coaction_right(u: OneForm) -> dict:
    """Delta_R(sum c_s omega_s) = sum Delta(c_s) (omega_p (x) M_ps), with M
    the right coaction matrix of the basis (checked against the a.db
    definition by :func:`verify_right_coaction_matrix`)."""
    P = calculus_algebra()
    one = P.one()
    M = right_coaction_matrix()
    images: dict = {}
    for (p, j), m in M.items():
        images.setdefault(j, {})[p] = TensorElement.pure(one, m)
    return _multiplicative(u, lambda s: images.get(s, {}))

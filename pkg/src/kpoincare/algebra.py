"""The kappa-Poincare group algebra and the kappa-Minkowski algebra.

Elements are kept in a PBW-type normal form: every monomial is a
commutative monomial in the Lorentz variables ``L[m,n]`` followed by an
ordered translation word (``x[0]`` powers first, then spatial ``x[i]`` in
nondecreasing index order).  A monomial is the pair ``(lam, word)`` where
``lam`` is a sorted tuple of Lorentz variable ids ``m*n + n`` and ``word``
is a sorted tuple of translation indices.

Rewriting uses

    x^r L^m_n = L^m_n x^r + (i/kappa)((L^m_0 - d^m_0) L^r_n + (L^0_n - d^0_n) g^{mr})
    x^k x^0   = (x^0 - i/kappa) x^k          (k spatial)

The Lorentz orthogonality relations are *not* used by the rewriting;
Lorentz polynomials are compared as functions on the group, see
:mod:`kpoincare.lorentz`.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb

from .scalars import _COERCIBLE, ONE, T, ZERO, Scalar, scalar
from .tensors import delta, g

Monomial = tuple  # (lam: tuple[int, ...], word: tuple[int, ...])
UNIT: Monomial = ((), ())
_NUMERIC = _COERCIBLE + (Scalar,)


class AlgebraError(ValueError):
    pass


def _merge(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def _acc(out: dict, key, c: Scalar) -> None:
    v = out.get(key)
    if v is None:
        out[key] = c
    else:
        v = v + c
        if v:
            out[key] = v
        else:
            del out[key]


class Algebra:
    """A kappa-Poincare (``kind='poincare'``) or kappa-Minkowski algebra."""

    def __init__(self, kind: str, n: int = 4):
        if kind not in ("poincare", "minkowski"):
            raise AlgebraError(f"unknown algebra kind {kind!r}")
        if n < 2:
            raise AlgebraError("dimension n must be at least 2")
        self.kind = kind
        self.n = n
        self.xname = "x" if kind == "poincare" else "y"
        self._move_cache: dict = {}
        self._mul_cache: dict = {}
        self._word_cache: dict = {}
        self._vf_cache: dict = {}
        self._cop_cache: dict = {}
        self._s_cache: dict = {}
        self._star_cache: dict = {}

    def __repr__(self):
        return f"Algebra({self.kind!r}, n={self.n})"

    def __reduce__(self):
        return (get_algebra, (self.kind, self.n))

    @property
    def has_lorentz(self) -> bool:
        return self.kind == "poincare"

    # -- generators ----------------------------------------------------------
    def var(self, mu: int, nu: int) -> int:
        return mu * self.n + nu

    def var_index(self, v: int) -> tuple[int, int]:
        return divmod(v, self.n)

    def check_index(self, *idx: int) -> None:
        for mu in idx:
            if not 0 <= mu < self.n:
                raise AlgebraError(f"index {mu} out of range for n = {self.n}")

    def element(self, terms: dict) -> AlgebraElement:
        return AlgebraElement(self, terms)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {UNIT: ONE})

    def const(self, c) -> AlgebraElement:
        c = scalar(c)
        return AlgebraElement(self, {UNIT: c} if c else {})

    def L(self, mu: int, nu: int) -> AlgebraElement:
        """Lorentz generator L^mu_nu."""
        if not self.has_lorentz:
            raise AlgebraError("Lorentz generators exist only in the kappa-Poincare algebra")
        self.check_index(mu, nu)
        return AlgebraElement(self, {((self.var(mu, nu),), ()): ONE})

    def L_low_up(self, nu: int, mu: int) -> AlgebraElement:
        """L_nu^mu = g_{nu nu} g^{mu mu} L^nu_mu (the inverse matrix)."""
        return self.L(nu, mu) * (g(nu) * g(mu))

    def x(self, mu: int) -> AlgebraElement:
        self.check_index(mu)
        return AlgebraElement(self, {((), (mu,)): ONE})

    gen = x

    def A(self, mu: int, nu: int) -> AlgebraElement:
        """L^mu_nu - delta^mu_nu."""
        return self.L(mu, nu) - delta(mu, nu)

    # -- rewriting core ------------------------------------------------------
    def _vfield(self, rho: int, lam: tuple) -> dict:
        """(i/kappa) V^rho(f) with [x^rho, f] = (i/kappa) V^rho f for a Lorentz monomial f."""
        key = (rho, lam)
        out = self._vf_cache.get(key)
        if out is not None:
            return out
        out = {}
        n = self.n
        cnt = Counter(lam)
        for v, mult in cnt.items():
            rest = list(lam)
            rest.remove(v)
            rest = tuple(rest)
            mu, nu = divmod(v, n)
            m = scalar(mult) * T
            # (L^mu_0 - d^mu_0) L^rho_nu + (L^0_nu - d^0_nu) g^{mu rho}
            _acc(out, _merge(rest, tuple(sorted((mu * n, rho * n + nu)))), m)
            if mu == 0:
                _acc(out, _merge(rest, (rho * n + nu,)), -m)
            if mu == rho:
                gm = g(mu)
                _acc(out, _merge(rest, (nu,)), m * gm)
                if nu == 0:
                    _acc(out, rest, -m * gm)
        self._vf_cache[key] = out
        return out

    def _move(self, word: tuple, lam: tuple) -> dict:
        """word * lam as sum of lam' * subword."""
        if not word or not lam:
            return {(lam, word): ONE}
        key = (word, lam)
        out = self._move_cache.get(key)
        if out is not None:
            return out
        out = {}
        rho = word[-1]
        prefix = word[:-1]
        for (l2, sub), c in self._move(prefix, lam).items():
            _acc(out, (l2, sub + (rho,)), c)
        for l3, c3 in self._vfield(rho, lam).items():
            for (l2, sub), c in self._move(prefix, l3).items():
                _acc(out, (l2, sub), c * c3)
        self._move_cache[key] = out
        return out

    def _wordmul(self, u: tuple, w: tuple) -> dict:
        if not u:
            return {w: ONE}
        if not w:
            return {u: ONE}
        key = (u, w)
        out = self._word_cache.get(key)
        if out is not None:
            return out
        a = u.count(0)
        s = u[a:]
        b = w.count(0)
        s2 = w[b:]
        m = len(s)
        spatial = tuple(sorted(s + s2))
        out = {}
        if m == 0 or b == 0:
            out[(0,) * (a + b) + spatial] = ONE
        else:
            mt = -scalar(m) * T
            for j in range(b + 1):
                c = scalar(comb(b, j)) * mt ** (b - j)
                _acc(out, (0,) * (a + j) + spatial, c)
        self._word_cache[key] = out
        return out

    def monomial_product(self, m1: Monomial, m2: Monomial) -> dict:
        l1, w1 = m1
        l2, w2 = m2
        if not w1:
            return {(_merge(l1, l2), w2): ONE}
        key = (m1, m2)
        out = self._mul_cache.get(key)
        if out is not None:
            return out
        out = {}
        for (l, u), c in self._move(w1, l2).items():
            ll = _merge(l1, l)
            for w, c2 in self._wordmul(u, w2).items():
                _acc(out, (ll, w), c * c2 if c2 is not ONE else c)
        self._mul_cache[key] = out
        return out

    # -- Hopf structure on monomials ------------------------------------------
    def _cop_gen_x(self, rho: int) -> TensorElement:
        if self.has_lorentz:
            terms = {(((self.var(rho, s),), ()), ((), (s,))): ONE for s in range(self.n)}
            terms[(((), (rho,)), UNIT)] = ONE
        else:
            terms = {(((), (rho,)), UNIT): ONE, (UNIT, ((), (rho,))): ONE}
        return TensorElement((self, self), terms)

    def coproduct_monomial(self, m: Monomial) -> dict:
        out = self._cop_cache.get(m)
        if out is not None:
            return out
        lam, word = m
        n = self.n
        # Delta(L^mu_nu) = L^mu_rho (x) L^rho_nu
        lamterms = {((), ()): ONE}
        for v in lam:
            mu, nu = divmod(v, n)
            nxt: dict = {}
            for (a, b), c in lamterms.items():
                for r in range(n):
                    _acc(nxt, (_merge(a, (mu * n + r,)), _merge(b, (r * n + nu,))), c)
            lamterms = nxt
        wt = TensorElement((self, self), {(UNIT, UNIT): ONE})
        for rho in word:
            wt = wt * self._cop_gen_x(rho)
        out = {}
        for (a, b), c in lamterms.items():
            for ((la, wa), (lb, wb)), c2 in wt.terms.items():
                _acc(out, ((_merge(a, la), wa), (_merge(b, lb), wb)), c * c2)
        self._cop_cache[m] = out
        return out

    def antipode_monomial(self, m: Monomial) -> dict:
        out = self._s_cache.get(m)
        if out is not None:
            return out
        lam, word = m
        n = self.n
        sign = 1
        slam = []
        for v in lam:
            mu, nu = divmod(v, n)
            sign *= g(mu) * g(nu)
            slam.append(nu * n + mu)
        res = AlgebraElement(self, {(tuple(sorted(slam)), ()): scalar(sign)})
        for rho in word:
            res = self._antipode_x(rho) * res
        out = res.terms
        self._s_cache[m] = out
        return out

    def _antipode_x(self, rho: int) -> AlgebraElement:
        if not self.has_lorentz:
            return AlgebraElement(self, {((), (rho,)): -ONE})
        # S(x^mu) = -L_nu^mu x^nu
        terms = {}
        for nu in range(self.n):
            terms[((self.var(nu, rho),), (nu,))] = scalar(-g(nu) * g(rho))
        return AlgebraElement(self, terms)

    def star_monomial(self, m: Monomial) -> dict:
        out = self._star_cache.get(m)
        if out is not None:
            return out
        lam, word = m
        res = AlgebraElement(self, {(lam, ()): ONE})
        for rho in word:
            res = AlgebraElement(self, {((), (rho,)): ONE}) * res
        out = res.terms
        self._star_cache[m] = out
        return out

    def counit_monomial(self, m: Monomial) -> int:
        lam, word = m
        if word:
            return 0
        n = self.n
        for v in lam:
            if v // n != v % n:
                return 0
        return 1

    def degree(self, m: Monomial) -> int:
        return len(m[0]) + len(m[1])

    def monomial_str(self, m: Monomial) -> str:
        lam, word = m
        parts = []
        for v, k in sorted(Counter(lam).items()):
            mu, nu = divmod(v, self.n)
            s = f"L[{mu},{nu}]"
            parts.append(s if k == 1 else f"{s}^{k}")
        for mu, k in _runs(word):
            s = f"{self.xname}[{mu}]"
            parts.append(s if k == 1 else f"{s}^{k}")
        return "*".join(parts) if parts else "1"

    def monomial_latex(self, m: Monomial) -> str:
        lam, word = m
        parts = []
        for v, k in sorted(Counter(lam).items()):
            mu, nu = divmod(v, self.n)
            s = f"\\Lambda^{{{mu}}}{{}}_{{{nu}}}"
            parts.append(s if k == 1 else f"\\left({s}\\right)^{{{k}}}")
        for mu, k in _runs(word):
            s = f"{self.xname}^{{{mu}}}"
            parts.append(s if k == 1 else f"\\left({s}\\right)^{{{k}}}")
        return " \\cdot ".join(parts) if parts else "1"


def _runs(word: tuple):
    out = []
    for mu in word:
        if out and out[-1][0] == mu:
            out[-1][1] += 1
        else:
            out.append([mu, 1])
    return [(a, b) for a, b in out]


@lru_cache(maxsize=None)
def get_algebra(kind: str, n: int = 4) -> Algebra:
    return Algebra(kind, n)


def poincare(n: int = 4) -> Algebra:
    return get_algebra("poincare", n)


def minkowski(n: int = 4) -> Algebra:
    return get_algebra("minkowski", n)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class AlgebraElement:
    """Normal-form linear combination of monomials; treat as immutable."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict):
        self.alg = alg
        self.terms = terms

    # -- arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> AlgebraElement:
        if not isinstance(other, (AlgebraElement,) + _NUMERIC):
            raise TypeError(f"cannot combine an algebra element with {type(other).__name__}")
        if isinstance(other, AlgebraElement):
            if other.alg is not self.alg:
                raise AlgebraError(
                    f"cannot combine elements of {self.alg} and {other.alg} without a tensor product"
                )
            return other
        return self.alg.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return AlgebraElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> AlgebraElement:
        c = scalar(c)
        if not c:
            return self.alg.zero()
        return AlgebraElement(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            if not isinstance(other, _NUMERIC):
                return NotImplemented
            return self.scale(other)
        other = self._coerce(other)
        alg = self.alg
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, c3 in alg.monomial_product(m1, m2).items():
                    _acc(out, m, c * c3 if c3 is not ONE else c)
        return AlgebraElement(alg, out)

    def __rmul__(self, other):
        if not isinstance(other, _NUMERIC):
            return NotImplemented
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(scalar(1) / scalar(other))

    def __pow__(self, k: int):
        if k < 0:
            raise AlgebraError("negative powers are not defined")
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    # -- inspection -------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.alg is other.alg and self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self.terms == self.alg.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self) -> int:
        return max((self.alg.degree(m) for m in self.terms), default=-1)

    def coefficient(self, m: Monomial) -> Scalar:
        return self.terms.get(m, ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (self.alg.degree(kv[0]), kv[0]))

    def __str__(self):
        from .render import needs_parens

        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            ms = self.alg.monomial_str(m)
            cs = str(c)
            if m == UNIT:
                parts.append(cs)
            elif c == 1:
                parts.append(ms)
            elif c == -1:
                parts.append("-" + ms)
            else:
                if needs_parens(cs):
                    cs = f"({cs})"
                parts.append(f"{cs}*{ms}")
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"<{self.alg.kind} n={self.alg.n}: {self}>"

    def latex(self) -> str:
        from .render import needs_parens

        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            ms = self.alg.monomial_latex(m)
            cs = c.latex()
            if m == UNIT:
                parts.append(cs)
            elif c == 1:
                parts.append(ms)
            elif c == -1:
                parts.append("-" + ms)
            else:
                if needs_parens(cs):
                    cs = f"\\left({cs}\\right)"
                parts.append(f"{cs} \\cdot {ms}")
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else " + " + p
        return out

    # -- structure maps ------------------------------------------------------------
    def counit(self) -> Scalar:
        alg = self.alg
        out = ZERO
        for m, c in self.terms.items():
            if alg.counit_monomial(m):
                out = out + c
        return out

    def coproduct(self) -> TensorElement:
        alg = self.alg
        out: dict = {}
        for m, c in self.terms.items():
            for k, c2 in alg.coproduct_monomial(m).items():
                _acc(out, k, c * c2)
        return TensorElement((alg, alg), out)

    def antipode(self) -> AlgebraElement:
        alg = self.alg
        out: dict = {}
        for m, c in self.terms.items():
            for k, c2 in alg.antipode_monomial(m).items():
                _acc(out, k, c * c2)
        return AlgebraElement(alg, out)

    def star(self) -> AlgebraElement:
        alg = self.alg
        out: dict = {}
        for m, c in self.terms.items():
            cc = c.conjugate()
            for k, c2 in alg.star_monomial(m).items():
                _acc(out, k, cc * c2)
        return AlgebraElement(alg, out)

    def adjoint(self) -> TensorElement:
        """ad(a) = sum b_k (x) S(a_k) c_k with (Delta (x) id)Delta(a) = sum a_k (x) b_k (x) c_k."""
        alg = self.alg
        out: dict = {}
        for (m1, m3), c in self.coproduct().terms.items():
            for (ma, mb), c2 in alg.coproduct_monomial(m1).items():
                sa = AlgebraElement(alg, alg.antipode_monomial(ma))
                right = sa * AlgebraElement(alg, {m3: ONE})
                cc = c * c2
                for mr, c3 in right.terms.items():
                    _acc(out, (mb, mr), cc * c3)
        return TensorElement((alg, alg), out)

    def is_zero(self, pool=None) -> bool:
        """Vanishing as an element of the algebra (Lorentz polynomials as functions)."""
        if not self.terms:
            return True
        if not self.alg.has_lorentz:
            return False
        from .lorentz import element_is_zero

        return element_is_zero(self, pool)

    def equivalent(self, other, pool=None) -> bool:
        return (self - other).is_zero(pool)


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b - b * a


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------

class TensorElement:
    """Element of A_1 (x) ... (x) A_k with legwise normal forms."""

    __slots__ = ("algs", "terms")

    def __init__(self, algs: tuple, terms: dict):
        self.algs = tuple(algs)
        self.terms = terms

    @classmethod
    def pure(cls, *elements: AlgebraElement) -> TensorElement:
        terms = {(): ONE}
        for e in elements:
            nxt: dict = {}
            for k, c in terms.items():
                for m, c2 in e.terms.items():
                    _acc(nxt, k + (m,), c * c2)
            terms = nxt
        return cls(tuple(e.alg for e in elements), terms)

    def _check(self, other: TensorElement) -> None:
        if len(self.algs) != len(other.algs) or any(a is not b for a, b in zip(self.algs, other.algs)):
            raise AlgebraError("tensor legs do not match")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorElement(self.algs, out)

    def __neg__(self):
        return TensorElement(self.algs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = -c
            elif v == c:
                del out[k]
            else:
                out[k] = v - c
        return TensorElement(self.algs, out)

    def scale(self, c) -> TensorElement:
        c = scalar(c)
        if not c:
            return TensorElement(self.algs, {})
        return TensorElement(self.algs, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        algs = self.algs
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = {(): c1 * c2}
                for alg, a, b in zip(algs, k1, k2):
                    prod = alg.monomial_product(a, b)
                    nxt: dict = {}
                    for key, c in partial.items():
                        for m, c3 in prod.items():
                            _acc(nxt, key + (m,), c * c3 if c3 is not ONE else c)
                    partial = nxt
                for key, c in partial.items():
                    _acc(out, key, c)
        return TensorElement(algs, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return self.algs == other.algs and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_leg(self, leg: int, fn) -> TensorElement:
        """Apply a linear map given on monomials (returning a dict of monomial tuples).

        ``fn(m)`` returns a dict ``{tuple_of_monomials: Scalar}`` that replaces the
        single monomial in position ``leg``; the new algebras are taken from
        ``fn.algs``.
        """
        out: dict = {}
        get = out.get
        for k, c in self.terms.items():
            pre, post = k[:leg], k[leg + 1 :]
            for rep, c2 in fn(k[leg]).items():
                key = pre + rep + post
                val = c if c2 is ONE else c * c2
                v = get(key)
                out[key] = val if v is None else v + val
        algs = self.algs[:leg] + tuple(fn.algs) + self.algs[leg + 1 :]
        return TensorElement(algs, {k: v for k, v in out.items() if v})

    def legs_multiplied(self) -> AlgebraElement:
        """m: A (x) A -> A."""
        alg = self.algs[0]
        out: dict = {}
        for (a, b), c in self.terms.items():
            for m, c2 in alg.monomial_product(a, b).items():
                _acc(out, m, c * c2)
        return AlgebraElement(alg, out)

    def is_zero(self, pool=None) -> bool:
        if not self.terms:
            return True
        from .lorentz import tensor_is_zero

        return tensor_is_zero(self, pool)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items(), key=lambda kv: kv[0]):
            legs = " (x) ".join(alg.monomial_str(m) for alg, m in zip(self.algs, k))
            cs = str(c)
            if c == 1:
                parts.append(legs)
            elif c == -1:
                parts.append("-" + legs)
            else:
                parts.append(f"({cs})*{legs}" if "+" in cs[1:] or "-" in cs[1:] else f"{cs}*{legs}")
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"<tensor {self}>"


def tensor_product(a: AlgebraElement, b: AlgebraElement) -> TensorElement:
    return TensorElement.pure(a, b)


class _LegMap:
    """Wraps a monomial -> dict map with its output algebras for ``map_leg``."""

    def __init__(self, fn, algs):
        self.fn = fn
        self.algs = algs

    def __call__(self, m):
        return self.fn(m)


def coproduct_leg(alg: Algebra) -> _LegMap:
    return _LegMap(lambda m: alg.coproduct_monomial(m), (alg, alg))


def identity_leg(alg: Algebra) -> _LegMap:
    return _LegMap(lambda m: {(m,): ONE}, (alg,))


def antipode_leg(alg: Algebra) -> _LegMap:
    return _LegMap(lambda m: {(k,): c for k, c in alg.antipode_monomial(m).items()}, (alg,))


def counit_leg(alg: Algebra) -> _LegMap:
    return _LegMap(lambda m: {(): ONE} if alg.counit_monomial(m) else {}, ())


def adjoint_action(a: AlgebraElement) -> TensorElement:
    """ad(a) = sum b_k (x) S(a_k) c_k over the twofold coproduct of a."""
    return a.adjoint()

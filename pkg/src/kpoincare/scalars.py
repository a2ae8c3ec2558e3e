"""Exact scalars: Gaussian-rational rational functions of the deformation
parameter q = 1/kappa.

Internally a scalar is stored as ``(nr + i*ni) / d`` where ``nr``, ``ni``
and ``d`` are polynomials with rational coefficients in ``t = i*q``.
Almost every coefficient that occurs in the kappa-Poincare formulas is a
polynomial in ``i/kappa`` with rational coefficients, so the imaginary
numerator is empty on the hot paths.  The representation is canonical:
``d`` is monic and ``gcd(nr, ni, d) = 1``.
"""

from __future__ import annotations

from functools import reduce
from fractions import Fraction

from gmpy2 import mpq

__all__ = [
    "GaussianRational",
    "NoClassicalLimit",
    "Scalar",
    "ZERO",
    "ONE",
    "I",
    "Q",
    "T",
    "scalar",
]

_Z = mpq(0)
_ONE = mpq(1)

Poly = tuple  # tuple of mpq, lowest degree first, no trailing zeros


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q
# ---------------------------------------------------------------------------

def _trim(c: list) -> Poly:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a: Poly, b: Poly) -> Poly:
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for k, v in enumerate(b):
        c[k] += v
    return _trim(c)


def _psub(a: Poly, b: Poly) -> Poly:
    if not b:
        return a
    c = list(a) + [_Z] * (len(b) - len(a))
    for k, v in enumerate(b):
        c[k] -= v
    return _trim(c)


def _pneg(a: Poly) -> Poly:
    return tuple(-v for v in a)


def _pscale(s, a: Poly) -> Poly:
    if not s:
        return ()
    return tuple(s * v for v in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return _pscale(a[0], b)
    if len(b) == 1:
        return _pscale(b[0], a)
    c = [_Z] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                c[i + j] += u * v
    return _trim(c)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    if len(r) <= db:
        return (), a
    qt = [_Z] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c:
            c = c / lc
            qt[k - db] = c
            for j in range(db + 1):
                r[k - db + j] -= c * b[j]
    return _trim(qt), _trim(r[:db])


def _pmonic(a: Poly) -> Poly:
    lc = a[-1]
    if lc == 1:
        return a
    return tuple(v / lc for v in a)


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    return _pmonic(a)


def _pneg_var(a: Poly) -> Poly:
    """p(t) -> p(-t)."""
    return tuple(-v if k & 1 else v for k, v in enumerate(a))


_PONE: Poly = (_ONE,)


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

class GaussianRational:
    """Exact complex number re + im*i with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(_Z))):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        other = _as_gauss(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_as_gauss(other))

    def __rsub__(self, other):
        return _as_gauss(other) - self

    def __mul__(self, other):
        o = _as_gauss(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_gauss(other)
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / n, -o.im / n)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return _fmt_gauss(self.re, self.im)


def _as_gauss(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x, 0)


def _fmt_rat(r) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def _fmt_gauss(re, im) -> str:
    if not im:
        return _fmt_rat(re)
    if not re:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{_fmt_rat(im)}*i"
    sign = "+" if im > 0 else "-"
    a = abs(im)
    tail = "i" if a == 1 else f"{_fmt_rat(a)}*i"
    return f"({_fmt_rat(re)}{sign}{tail})"


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

class NoClassicalLimit(ArithmeticError):
    """Raised when a scalar has a pole at 1/kappa = 0."""

    def __init__(self, value: Scalar):
        super().__init__(f"scalar {value} has no classical limit (pole at q = 0)")
        self.value = value


class Scalar:
    __slots__ = ("nr", "ni", "d", "_hash")

    def __init__(self, nr: Poly = (), ni: Poly = (), d: Poly = _PONE, _canonical: bool = False):
        if not _canonical:
            nr, ni, d = _canon(nr, ni, d)
        self.nr = nr
        self.ni = ni
        self.d = d
        self._hash = None

    # -- construction -----------------------------------------------------
    @classmethod
    def from_rational(cls, r) -> Scalar:
        r = mpq(r)
        if not r:
            return ZERO
        return cls((r,), (), _PONE, True)

    @classmethod
    def from_gauss(cls, re, im=0) -> Scalar:
        re, im = mpq(re), mpq(im)
        return cls(_trim([re]), _trim([im]), _PONE, True)

    @classmethod
    def from_q_coeffs(cls, coeffs) -> Scalar:
        """Polynomial sum_k c_k q^k with Gaussian-rational c_k."""
        nr, ni = [], []
        for k, c in enumerate(coeffs):
            c = _as_gauss(c)
            # q^k = (-i)^k t^k
            a, b = _rot(c.re, c.im, (-k) % 4)
            nr.append(a)
            ni.append(b)
        return cls(_trim(nr), _trim(ni), _PONE, True)

    # -- predicates --------------------------------------------------------
    def __bool__(self):
        return bool(self.nr) or bool(self.ni)

    def is_polynomial(self) -> bool:
        return len(self.d) == 1

    def is_constant(self) -> bool:
        return len(self.d) == 1 and len(self.nr) <= 1 and len(self.ni) <= 1

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.nr == other.nr and self.ni == other.ni and self.d == other.d
        if isinstance(other, int):
            return self == Scalar.from_rational(other)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.nr, self.ni, self.d))
        return h

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, _COERCIBLE):
                return NotImplemented
            other = scalar(other)
        if not other:
            return self
        if not self:
            return other
        if self.d is other.d or self.d == other.d:
            if len(self.d) == 1:
                nr = _padd(self.nr, other.nr)
                ni = _padd(self.ni, other.ni)
                if not nr and not ni:
                    return ZERO
                return Scalar(nr, ni, _PONE, True)
            return Scalar(_padd(self.nr, other.nr), _padd(self.ni, other.ni), self.d)
        return Scalar(
            _padd(_pmul(self.nr, other.d), _pmul(other.nr, self.d)),
            _padd(_pmul(self.ni, other.d), _pmul(other.ni, self.d)),
            _pmul(self.d, other.d),
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_pneg(self.nr), _pneg(self.ni), self.d, True)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, _COERCIBLE):
                return NotImplemented
            other = scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, _COERCIBLE):
                return NotImplemented
            other = scalar(other)
        if not self or not other:
            return ZERO
        a, b = self, other
        # unit fast paths (the common case in structure-map expansions)
        if not b.ni and len(b.d) == 1 and len(b.nr) == 1:
            v = b.nr[0]
            if v == 1:
                return a
            if v == -1:
                return Scalar(_pneg(a.nr), _pneg(a.ni), a.d, True)
        if not a.ni and len(a.d) == 1 and len(a.nr) == 1:
            v = a.nr[0]
            if v == 1:
                return b
            if v == -1:
                return Scalar(_pneg(b.nr), _pneg(b.ni), b.d, True)
        if a.ni or b.ni:
            nr = _psub(_pmul(a.nr, b.nr), _pmul(a.ni, b.ni))
            ni = _padd(_pmul(a.nr, b.ni), _pmul(a.ni, b.nr))
        else:
            nr = _pmul(a.nr, b.nr)
            ni = ()
        if len(a.d) == 1 and len(b.d) == 1:
            return Scalar(nr, ni, _PONE, True)
        return Scalar(nr, ni, _pmul(a.d, b.d))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self:
            raise ZeroDivisionError("division by the zero scalar")
        # 1/((nr + i ni)/d) = d (nr - i ni) / (nr^2 + ni^2)
        den = _padd(_pmul(self.nr, self.nr), _pmul(self.ni, self.ni))
        return Scalar(_pmul(self.d, self.nr), _pneg(_pmul(self.d, self.ni)), den)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, _COERCIBLE):
                return NotImplemented
            other = scalar(other)
        if not other:
            raise ZeroDivisionError("division by the zero scalar")
        if other.is_constant() and not other.ni:
            c = other.nr[0]
            return Scalar(tuple(v / c for v in self.nr), tuple(v / c for v in self.ni), self.d, True)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return scalar(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> Scalar:
        """Complex conjugation with kappa real (so i/kappa -> -i/kappa)."""
        return Scalar(_pneg_var(self.nr), _pneg(_pneg_var(self.ni)), _pneg_var(self.d))

    # -- evaluation --------------------------------------------------------
    def classical_limit(self) -> GaussianRational:
        d0 = self.d[0] if self.d else _Z
        if not d0:
            raise NoClassicalLimit(self)
        re = self.nr[0] / d0 if self.nr else _Z
        im = self.ni[0] / d0 if self.ni else _Z
        return GaussianRational(re, im)

    def q_coefficients(self) -> tuple[list[GaussianRational], list[GaussianRational]]:
        """Numerator and denominator coefficients in powers of q.

        The denominator is normalized to a leading q-coefficient of 1.
        """
        m = len(self.d) - 1
        num = _q_coeffs(self.nr, self.ni, m)
        den = _q_coeffs(self.d, (), m)
        return num, den

    def degree_in_q(self) -> int:
        return max(len(self.nr), len(self.ni)) - 1

    # -- rendering ---------------------------------------------------------
    def __str__(self):
        from .render import scalar_text

        return scalar_text(self)

    def __repr__(self):
        return f"Scalar({self})"

    def latex(self) -> str:
        from .render import scalar_latex

        return scalar_latex(self)


def _rot(a, b, k: int):
    """(a + ib) * i^k."""
    for _ in range(k % 4):
        a, b = -b, a
    return a, b


def _q_coeffs(pr: Poly, pi: Poly, shift: int) -> list[GaussianRational]:
    # coefficient of q^k of (pr + i pi)(t), then divided by i^shift
    n = max(len(pr), len(pi))
    out = []
    for k in range(n):
        a = pr[k] if k < len(pr) else _Z
        b = pi[k] if k < len(pi) else _Z
        a, b = _rot(a, b, (k - shift) % 4)
        out.append(GaussianRational(a, b))
    return out


def _canon(nr: Poly, ni: Poly, d: Poly):
    if not d:
        raise ZeroDivisionError("scalar with zero denominator")
    if not nr and not ni:
        return (), (), _PONE
    if len(d) > 1:
        g = _pgcd(_pgcd(nr, ni) if ni else nr, d)
        if len(g) > 1:
            nr = _pdivmod(nr, g)[0] if nr else ()
            ni = _pdivmod(ni, g)[0] if ni else ()
            d = _pdivmod(d, g)[0]
    lc = d[-1]
    if lc != 1:
        nr = tuple(v / lc for v in nr)
        ni = tuple(v / lc for v in ni)
        d = tuple(v / lc for v in d)
    return nr, ni, d


_COERCIBLE = (int, type(mpq(0)), Fraction, GaussianRational)


def scalar(x) -> Scalar:
    """Coerce ints, rationals, GaussianRationals and Scalars."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, GaussianRational):
        return Scalar.from_gauss(x.re, x.im)
    if isinstance(x, int) and -8 <= x <= 8:
        return _SMALL[x + 8]
    return Scalar.from_rational(x)


ZERO = Scalar((), (), _PONE, True)
ONE = Scalar(_PONE, (), _PONE, True)
_SMALL = [Scalar((mpq(k),), (), _PONE, True) if k else ZERO for k in range(-8, 9)]
I = Scalar((), (_ONE,), _PONE, True)
T = Scalar((_Z, _ONE), (), _PONE, True)  # i/kappa
Q = T * Scalar((), (mpq(-1),), _PONE, True)  # 1/kappa = -i t


def sum_scalars(values) -> Scalar:
    return reduce(lambda a, b: a + b, values, ZERO)


_ARITH = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def scalar_arith(a, b, op: str) -> Scalar:
    """Apply one field operation; ``neg`` ignores ``b``.  Division by zero raises."""
    if op == "neg":
        return -scalar(a)
    try:
        f = _ARITH[op]
    except KeyError:
        raise ValueError(f"unknown scalar operation {op!r}") from None
    return f(scalar(a), scalar(b))

"""Exact sample points on the Lorentz group and zero-testing of Lorentz
polynomials.

Points are produced by the Cayley transform of random g-skew rational
matrices, then composed with parity and time reflections so that all four
connected components are sampled.  A polynomial in the ``L[m,n]`` variables
is declared zero iff it vanishes at every point of the pool.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from gmpy2 import mpq

from .scalars import Scalar, _padd, _pscale
from .tensors import g

COMPONENTS = ("identity", "parity", "time", "parity-time")
DEFAULT_SEED = 1994
DEFAULT_PER_COMPONENT = 3


@dataclass(frozen=True)
class LorentzSamplePoint:
    matrix: tuple  # flattened row-major n*n tuple of mpq, entry [mu*n + nu] = L^mu_nu
    n: int
    component: str

    def entry(self, mu: int, nu: int):
        return self.matrix[mu * self.n + nu]

    def is_lorentz(self) -> bool:
        n = self.n
        for a in range(n):
            for b in range(n):
                s = sum(self.entry(r, a) * g(r) * self.entry(r, b) for r in range(n))
                if s != (g(a) if a == b else 0):
                    return False
        return True

    def determinant(self):
        return _det([[self.entry(i, j) for j in range(self.n)] for i in range(self.n)])


def _det(m):
    m = [row[:] for row in m]
    n = len(m)
    det = mpq(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return mpq(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def _inverse(m):
    n = len(m)
    a = [list(row) + [mpq(1 if i == j else 0) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return None
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [v / piv for v in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [u - f * v for u, v in zip(a[r], a[c])]
    return [row[n:] for row in a]


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def cayley_point(n: int, rng: random.Random) -> list:
    """Identity-component Lorentz matrix (I - M)(I + M)^{-1} for random g-skew M."""
    while True:
        k = [[mpq(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = mpq(rng.randint(-4, 4), rng.randint(1, 3))
                k[i][j] = v
                k[j][i] = -v
        m = [[g(i) * k[i][j] for j in range(n)] for i in range(n)]
        ip = [[mpq(1 if i == j else 0) + m[i][j] for j in range(n)] for i in range(n)]
        inv = _inverse(ip)
        if inv is None:
            continue  # degenerate Cayley parameter: resample
        im = [[mpq(1 if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]
        return _matmul(im, inv)


def _reflection(n: int, component: str) -> list:
    d = [mpq(1)] * n
    if component in ("parity", "parity-time"):
        d[1] = mpq(-1)
    if component in ("time", "parity-time"):
        d[0] = mpq(-1)
    return [[d[i] if i == j else mpq(0) for j in range(n)] for i in range(n)]


class SamplePool:
    """Read-only pool of exact Lorentz matrices covering all four components."""

    def __init__(self, n: int, per_component: int = DEFAULT_PER_COMPONENT, seed: int = DEFAULT_SEED):
        self.n = n
        self.per_component = per_component
        self.seed = seed
        rng = random.Random(seed * 7919 + n)
        pts = []
        for comp in COMPONENTS:
            r = _reflection(n, comp)
            for _ in range(per_component):
                m = _matmul(cayley_point(n, rng), r)
                pts.append(
                    LorentzSamplePoint(tuple(v for row in m for v in row), n, comp)
                )
        self.points = tuple(pts)
        self._rng_seed = seed
        self._mono_cache = [dict() for _ in self.points]

    def monomial_value(self, k: int, lam: tuple):
        """Value of the Lorentz monomial ``lam`` at point ``k`` (cached)."""
        cache = self._mono_cache[k]
        v = cache.get(lam)
        if v is None:
            mat = self.points[k].matrix
            v = mpq(1)
            for var in lam:
                v *= mat[var]
            cache[lam] = v
        return v

    def __len__(self):
        return len(self.points)

    def tuples(self, legs: int):
        """Point tuples for a tensor with ``legs`` Lorentz legs."""
        if legs <= 2:
            return list(product(self.points, repeat=legs))
        rng = random.Random(self._rng_seed + legs)
        by_comp = {c: [p for p in self.points if p.component == c] for c in COMPONENTS}
        out = []
        for comps in product(COMPONENTS, repeat=legs):
            out.append(tuple(rng.choice(by_comp[c]) for c in comps))
        return out


@lru_cache(maxsize=None)
def _default_pool(n: int, per_component: int, seed: int) -> SamplePool:
    return SamplePool(n, per_component, seed)


_settings = {"per_component": DEFAULT_PER_COMPONENT, "seed": DEFAULT_SEED}


def configure(per_component: int | None = None, seed: int | None = None) -> None:
    """Set the parameters of the default pools (CLI ``--samples-per-component``)."""
    if per_component is not None:
        if per_component < 1:
            raise ValueError("need at least one sample point per component")
        _settings["per_component"] = per_component
    if seed is not None:
        _settings["seed"] = seed


def default_pool(n: int) -> SamplePool:
    return _default_pool(n, _settings["per_component"], _settings["seed"])


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _eval_poly(poly: dict, points: tuple) -> tuple | Scalar:
    """Evaluate {lam_tuple_per_leg: Scalar} at a tuple of points.

    Returns a Scalar.
    """
    nr: tuple = ()
    ni: tuple = ()
    rest = None
    for lams, c in poly.items():
        v = mpq(1)
        for lam, p in zip(lams, points):
            mat = p.matrix
            for var in lam:
                v *= mat[var]
                if not v:
                    break
            if not v:
                break
        if not v:
            continue
        if len(c.d) == 1:
            nr = _padd(nr, _pscale(v, c.nr))
            if c.ni:
                ni = _padd(ni, _pscale(v, c.ni))
        else:
            term = c * Scalar.from_rational(v)
            rest = term if rest is None else rest + term
    out = Scalar(nr, ni) if (nr or ni) else None
    if rest is not None:
        out = rest if out is None else out + rest
    from .scalars import ZERO

    return ZERO if out is None else out


def lambda_poly_is_zero(poly, pool: SamplePool | None = None, n: int | None = None) -> bool:
    """Decide whether a polynomial in the Lorentz variables vanishes on O(1, n-1).

    ``poly`` is either an AlgebraElement without translation generators or
    a mapping ``{lam_tuple: Scalar}``.
    """
    from .algebra import AlgebraElement

    if isinstance(poly, AlgebraElement):
        if any(w for (_, w) in poly.terms):
            raise ValueError("lambda_poly_is_zero expects a pure Lorentz polynomial")
        n = poly.alg.n
        poly = {lam: c for (lam, _), c in poly.terms.items()}
    if not poly:
        return True
    if pool is None:
        if n is None:
            raise ValueError("dimension required")
        pool = default_pool(n)
    wrapped = {(lam,): c for lam, c in poly.items()}
    return all(not _eval_poly(wrapped, (p,)) for p in pool.points)


def element_is_zero(elem, pool: SamplePool | None = None) -> bool:
    if pool is None:
        pool = default_pool(elem.alg.n)
    groups: dict = {}
    for (lam, word), c in elem.terms.items():
        groups.setdefault(word, {})[(lam,)] = c
    if all(len(c.d) == 1 for c in elem.terms.values()):
        for poly in groups.values():
            flat = {lams: dict(_flat_coefficients(c)) for lams, c in poly.items()}
            if not _flat_poly_is_zero(pool, flat, 1):
                return False
        return True
    for poly in groups.values():
        for p in pool.points:
            if _eval_poly(poly, (p,)):
                return False
    return True


def element_values(elem, pool: SamplePool | None = None) -> dict:
    """{(point_index, word): Scalar} for every nonzero evaluation."""
    if pool is None:
        pool = default_pool(elem.alg.n)
    groups: dict = {}
    for (lam, word), c in elem.terms.items():
        groups.setdefault(word, {})[(lam,)] = c
    out = {}
    for word, poly in groups.items():
        for k, p in enumerate(pool.points):
            v = _eval_poly(poly, (p,))
            if v:
                out[(k, word)] = v
    return out



def _flat_coefficients(c: Scalar):
    """[(slot, mpq)] for a polynomial scalar, slots (part, power); None otherwise."""
    if len(c.d) != 1:
        return None
    out = [((0, k), v) for k, v in enumerate(c.nr) if v]
    out += [((1, k), v) for k, v in enumerate(c.ni) if v]
    return out


def _contract_leg(pool: SamplePool, k: int, poly: dict) -> dict:
    """Evaluate the first Lorentz leg of {(lam1, rest): {slot: mpq}} at point k."""
    out: dict = {}
    for (lam, rest), coeffs in poly.items():
        v = pool.monomial_value(k, lam)
        if not v:
            continue
        acc = out.setdefault(rest, {})
        for slot, c in coeffs.items():
            nv = acc.get(slot, 0) + v * c
            if nv:
                acc[slot] = nv
            else:
                acc.pop(slot, None)
    return out


def _flat_poly_is_zero(pool: SamplePool, poly: dict, legs: int) -> bool:
    """poly: {lams_tuple: {slot: mpq}}; exact zero test over the pool."""
    if legs == 1:
        for k in range(len(pool.points)):
            acc: dict = {}
            for (lam,), coeffs in poly.items():
                v = pool.monomial_value(k, lam)
                if not v:
                    continue
                for slot, c in coeffs.items():
                    acc[slot] = acc.get(slot, 0) + v * c
            if any(acc.values()):
                return False
        return True
    split = {(lams[0], lams[1:]): coeffs for lams, coeffs in poly.items()}
    for k in range(len(pool.points)):
        rest = _contract_leg(pool, k, split)
        rest = {r: c for r, c in rest.items() if c}
        if rest and not _flat_poly_is_zero(pool, rest, legs - 1):
            return False
    return True


def tensor_is_zero(t, pool: SamplePool | None = None) -> bool:
    lorentz_legs = [k for k, a in enumerate(t.algs) if a.has_lorentz]
    if not lorentz_legs:
        return not t.terms
    n = t.algs[lorentz_legs[0]].n
    if pool is None:
        pool = default_pool(n)
    legs = len(lorentz_legs)
    groups: dict = {}
    flat_ok = legs <= 2
    for key, c in t.terms.items():
        words = tuple(m[1] for m in key)
        lams = tuple(key[k][0] for k in lorentz_legs)
        groups.setdefault(words, {})[lams] = c
        if flat_ok and len(c.d) != 1:
            flat_ok = False
    if flat_ok:
        # all point pairs, evaluated leg by leg
        for poly in groups.values():
            flat = {lams: dict(_flat_coefficients(c)) for lams, c in poly.items()}
            if not _flat_poly_is_zero(pool, flat, legs):
                return False
        return True
    tuples = pool.tuples(legs)
    for poly in groups.values():
        for pts in tuples:
            if _eval_poly(poly, pts):
                return False
    return True

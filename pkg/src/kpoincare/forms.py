"""Left-module elements over a fixed symbol basis: sum_s c_s * s with
algebra coefficients on the left.  Used for 1-forms, 2-forms and formal
tensor products of forms."""

from __future__ import annotations

from .algebra import AlgebraElement, _NUMERIC
from .render import needs_parens
from .scalars import ONE, scalar


class SymbolSpace:
    """Ordering and rendering of the basis symbols of a form space."""

    name = "forms"

    def key(self, sym):
        return sym

    def text(self, sym) -> str:
        return str(sym)

    def latex(self, sym) -> str:
        return str(sym)


class Form:
    __slots__ = ("alg", "space", "terms")

    def __init__(self, alg, space: SymbolSpace, terms: dict | None = None):
        self.alg = alg
        self.space = space
        self.terms = {s: c for s, c in (terms or {}).items() if c.terms}

    # -- construction ------------------------------------------------------------
    def _new(self, terms: dict) -> Form:
        out = object.__new__(type(self))
        Form.__init__(out, self.alg, self.space, terms)
        return out

    @classmethod
    def from_scalars(cls, alg, space, coeffs: dict) -> Form:
        out = object.__new__(cls)
        Form.__init__(out, alg, space, {s: alg.const(c) for s, c in coeffs.items() if c})
        return out

    def _check(self, other: Form) -> None:
        if not isinstance(other, Form) or other.space is not self.space or other.alg is not self.alg:
            raise TypeError("forms live in different spaces")

    # -- arithmetic ----------------------------------------------------------------
    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out[s] + c if s in out else c
        return self._new(out)

    def __neg__(self):
        return self._new({s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> Form:
        c = scalar(c)
        return self._new({s: v.scale(c) for s, v in self.terms.items()})

    def left_multiply(self, a: AlgebraElement) -> Form:
        return self._new({s: a * c for s, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.left_multiply(other)
        if isinstance(other, _NUMERIC):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, _NUMERIC):
            return self.scale(other)
        if isinstance(other, AlgebraElement):
            return self.right_multiply(other)
        return NotImplemented

    def right_multiply(self, a: AlgebraElement) -> Form:
        raise NotImplementedError(f"{type(self).__name__} has no right module structure")

    # -- inspection ----------------------------------------------------------------
    def coefficient(self, sym) -> AlgebraElement:
        return self.terms.get(sym, self.alg.zero())

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Form):
            return self.space is other.space and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self, pool=None) -> bool:
        return all(c.is_zero(pool) for c in self.terms.values())

    def equivalent(self, other: Form, pool=None) -> bool:
        return (self - other).is_zero(pool)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self.space.key(kv[0]))

    def scalar_coefficients(self) -> dict:
        """{symbol: Scalar} when every coefficient is a constant."""
        out = {}
        for s, c in self.terms.items():
            if any(m != ((), ()) for m in c.terms):
                raise ValueError("form has non-constant coefficients")
            out[s] = c.counit()
        return out

    def _render(self, sym_fn, coeff_fn, open_p, close_p, dot) -> str:
        if not self.terms:
            return "0"
        parts = []
        for s, c in self.sorted_terms():
            ss = sym_fn(s)
            if c == ONE:
                parts.append(ss)
                continue
            if c == -ONE:
                parts.append("-" + ss)
                continue
            cs = coeff_fn(c)
            if len(c.terms) > 1 or needs_parens(cs):
                cs = f"{open_p}{cs}{close_p}"
            parts.append(f"{cs}{dot}{ss}")
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else " + " + p
        return out

    def __str__(self):
        return self._render(self.space.text, str, "(", ")", "*")

    def latex(self) -> str:
        return self._render(self.space.latex, lambda c: c.latex(), "\\left(", "\\right)", " \\cdot ")

    def __repr__(self):
        return f"<{type(self).__name__}: {self}>"

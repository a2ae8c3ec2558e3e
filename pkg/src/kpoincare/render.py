"""Text and LaTeX rendering of scalars, monomials and elements.

Every rendering produced here is accepted back by :mod:`kpoincare.parser`.
"""

from __future__ import annotations

from .scalars import GaussianRational, Scalar, _fmt_gauss, _fmt_rat


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def _q_term(c: GaussianRational, k: int) -> str:
    if k == 0:
        return _fmt_gauss(c.re, c.im)
    qs = "q" if k == 1 else f"q^{k}"
    if c == 1:
        return qs
    if c == -1:
        return "-" + qs
    return f"{_fmt_gauss(c.re, c.im)}*{qs}"


def _poly_text(coeffs: list[GaussianRational]) -> str:
    return _join([_q_term(c, k) for k, c in enumerate(coeffs) if c])


def scalar_text(s: Scalar) -> str:
    num, den = s.q_coefficients()
    if len(den) == 1:
        return _poly_text(num)
    return f"({_poly_text(num)})/({_poly_text(den)})"


def _latex_term(c: GaussianRational, k: int) -> str:
    kap = "" if k == 0 else ("\\kappa" if k == 1 else f"\\kappa^{{{k}}}")
    if c.re and c.im:
        body = f"\\left({_latex_gauss(c)}\\right)"
        return body if not kap else f"{body}\\frac{{1}}{{{kap}}}"
    r = c.re if c.re else c.im
    unit = "" if c.re else "i"
    sign = "-" if r < 0 else ""
    r = abs(r)
    p, d = r.numerator, r.denominator
    if unit:
        numer = unit if p == 1 else f"{p}{unit}"
    else:
        numer = str(p)
    denom = ("" if d == 1 else str(d)) + kap
    if not denom:
        return sign + numer
    return f"{sign}\\frac{{{numer}}}{{{denom}}}"


def _latex_gauss(c: GaussianRational) -> str:
    re = _fmt_rat(c.re)
    im = abs(c.im)
    sgn = "+" if c.im > 0 else "-"
    imt = "i" if im == 1 else f"{_fmt_rat(im)}i"
    return f"{re}{sgn}{imt}"


def _poly_latex(coeffs: list[GaussianRational]) -> str:
    return _join([_latex_term(c, k) for k, c in enumerate(coeffs) if c])


def scalar_latex(s: Scalar) -> str:
    num, den = s.q_coefficients()
    if len(den) == 1:
        return _poly_latex(num)
    return f"\\frac{{{_poly_latex(num)}}}{{{_poly_latex(den)}}}"


def needs_parens(text: str) -> bool:
    depth = 0
    for k, ch in enumerate(text):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch in "+-" and depth == 0 and k > 0:
            return True
    return False

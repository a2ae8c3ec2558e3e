"""Metric and Levi-Civita symbols.

Convention: g = diag(+, -, ..., -) and eps^{0 1 ... n-1} = +1 with all
indices up; lowering every index multiplies by det(g) = (-1)^(n-1), so
eps_{0123} = -1 in four dimensions.  The spatial symbol eps_{ijk} used
with the rotation/boost split has eps_{123} = +1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations


def g(mu: int, nu: int | None = None) -> int:
    """Metric component; g(mu) is the diagonal entry g_{mu mu} = g^{mu mu}."""
    if nu is not None and nu != mu:
        return 0
    return 1 if mu == 0 else -1


def delta(mu: int, nu: int) -> int:
    return 1 if mu == nu else 0


def _perm_sign(p: tuple[int, ...]) -> int:
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _eps_table(n: int) -> dict[tuple[int, ...], int]:
    return {p: _perm_sign(p) for p in permutations(range(n))}


def eps_upper(*idx: int) -> int:
    """eps^{idx}, all indices up, eps^{01...} = +1."""
    return _eps_table(len(idx)).get(tuple(idx), 0)


def eps_lower(*idx: int) -> int:
    """eps_{idx}, all indices lowered with g."""
    v = eps_upper(*idx)
    return -v if (len(idx) - 1) % 2 else v


def eps_mixed(pattern: str, *idx: int) -> int:
    """Levi-Civita symbol with a per-slot position pattern like ``"ul uu"``.

    ``pattern`` lists 'u' (upper) or 'l' (lower) for each slot; blanks are
    ignored.  Starting from eps with all indices up, each lowered slot
    contributes a factor g_{mu mu}.
    """
    pattern = pattern.replace(" ", "")
    v = eps_upper(*idx)
    if not v:
        return 0
    for pos, mu in zip(pattern, idx):
        if pos == "l":
            v *= g(mu)
    return v


def eps3(i: int, j: int, k: int) -> int:
    """Spatial eps_{ijk} on labels 1..3 with eps_{123} = +1."""
    return _eps_table(3).get((i - 1, j - 1, k - 1), 0)

"""Sparse exact row echelon forms over the scalar field.

Vectors are dicts ``{column: Scalar}``.  Columns carry a priority; each
stored row is normalized so that its highest-priority column (the pivot)
has coefficient 1.  Rows may carry *tags*: a linear combination of named
reference vectors, so that reducing a vector also expresses it in terms
of the tagged rows (used for quotient coordinates).
"""

from __future__ import annotations

from typing import Callable, Hashable

from .scalars import ONE, ZERO, Scalar


def _axpy(y: dict, a: Scalar, x: dict) -> None:
    """y -= a * x, in place."""
    for k, v in x.items():
        w = y.get(k)
        if w is None:
            y[k] = -(a * v)
        else:
            w = w - a * v
            if w:
                y[k] = w
            else:
                del y[k]


class Echelon:
    def __init__(self, priority: Callable[[Hashable], object] | None = None):
        self.priority = priority or (lambda c: c)
        self.rows: dict = {}  # pivot column -> (row, tags)
        self._pkey: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _key(self, col):
        k = self._pkey.get(col)
        if k is None:
            k = self._pkey[col] = self.priority(col)
        return k

    def reduce(self, vec: dict, tags: dict | None = None) -> tuple[dict, dict]:
        """Return (residual, accumulated tags) of ``vec`` modulo the stored rows.

        ``vec - residual`` equals the combination of stored rows whose tag sum is
        the returned tag dict (plus the tags passed in).
        """
        v = dict(vec)
        acc = dict(tags) if tags else {}
        rows = self.rows
        while True:
            best = None
            bk = None
            for c in v:
                if c in rows:
                    k = self._key(c)
                    if best is None or k > bk:
                        best, bk = c, k
            if best is None:
                return v, acc
            a = v[best]
            row, rtags = rows[best]
            _axpy(v, a, row)
            if rtags:
                for t, w in rtags.items():
                    nw = acc.get(t, ZERO) + a * w
                    if nw:
                        acc[t] = nw
                    else:
                        acc.pop(t, None)

    def add(self, vec: dict, tags: dict | None = None) -> Hashable | None:
        """Insert a vector; returns its pivot column or None if dependent."""
        v, acc = self.reduce(vec)
        if tags:
            # stored tags mean: row = (original vector) - sum(acc rows); keep row's tag content
            acc = {t: -w for t, w in acc.items()}
            for t, w in tags.items():
                nw = acc.get(t, ZERO) + w
                if nw:
                    acc[t] = nw
                else:
                    acc.pop(t, None)
        else:
            acc = {t: -w for t, w in acc.items()}
        if not v:
            return None
        piv = max(v, key=self._key)
        p = v[piv]
        if p != ONE:
            inv = p.inverse()
            v = {k: c * inv for k, c in v.items()}
            acc = {t: w * inv for t, w in acc.items()}
        self.rows[piv] = (v, acc)
        return piv

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

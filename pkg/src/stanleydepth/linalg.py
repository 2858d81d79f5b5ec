"""Exact rank of sparse integer matrices over Q or GF(p).

Matrices are lists of rows, each row a dict ``{column: value}`` with integer
values.  Over Q the elimination is fraction free: a row is updated as
``v*s - w*r`` and then divided by the gcd of its entries, so every
intermediate value stays an integer.  Pivots are chosen Markowitz style,
preferring unit entries, which keeps the boundary matrices we feed in
(entries +-1, a few per row) nearly free of growth.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 (the rationals) or a prime p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p == 1 or (p > 1 and not _is_prime(p)):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF32003 = FieldSpec(32003)


def _content_normalize(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def rank(rows, field: FieldSpec = QQ) -> int:
    """Rank of the matrix whose rows are given as ``{col: int}`` dicts."""
    p = field.characteristic
    live: dict = {}
    cols: dict = {}
    for k, r in enumerate(rows):
        if p:
            r = {c: v % p for c, v in r.items() if v % p}
        else:
            r = {c: v for c, v in r.items() if v}
        if not r:
            continue
        live[k] = r
        for c in r:
            cols.setdefault(c, set()).add(k)

    rk = 0
    while live:
        # Markowitz-flavoured pivot: short row, then short column, unit entries first
        key = min(live, key=lambda k: (len(live[k]), k))
        prow = live.pop(key)
        pcol = min(prow, key=lambda c: (abs(prow[c]) != 1, len(cols[c]), c))
        pval = prow[pcol]
        for c in prow:
            cols[c].discard(key)
        rk += 1
        for k in sorted(cols[pcol]):
            row = live[k]
            w = row[pcol]
            for c in row:
                cols[c].discard(k)
            if p:
                f = w * pow(pval, -1, p) % p
                new = dict(row)
                for c, v in prow.items():
                    x = (new.get(c, 0) - f * v) % p
                    if x:
                        new[c] = x
                    else:
                        new.pop(c, None)
            else:
                if pval in (1, -1):
                    f = w * pval
                    new = dict(row)
                    for c, v in prow.items():
                        x = new.get(c, 0) - f * v
                        if x:
                            new[c] = x
                        else:
                            new.pop(c, None)
                else:
                    new = {c: pval * v for c, v in row.items()}
                    for c, v in prow.items():
                        x = new.get(c, 0) - w * v
                        if x:
                            new[c] = x
                        else:
                            new.pop(c, None)
                    new = _content_normalize(new) if new else new
            if new:
                live[k] = new
                for c in new:
                    cols.setdefault(c, set()).add(k)
            else:
                del live[k]
    return rk


def rank_dense(matrix, field: FieldSpec = QQ) -> int:
    """Convenience wrapper for a list-of-lists matrix."""
    return rank([{j: v for j, v in enumerate(row) if v} for row in matrix], field)

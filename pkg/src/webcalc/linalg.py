"""Exact sparse elimination over Q and Q(zeta_N)."""
from __future__ import annotations

from fractions import Fraction

from .scalars import Cyclo, LaurentQ, LaurentX, is_zero


def inverse(x):
    if isinstance(x, Cyclo):
        return x.inverse()
    if isinstance(x, (LaurentQ, LaurentX)):
        raise TypeError("Laurent polynomials do not form a field")
    return Fraction(1) / x


def sparse_rank(rows: list[dict]) -> int:
    """Rank of a list of sparse row vectors (dict column -> field element)."""
    pivots: dict = {}  # column -> reduced row with leading 1 at that column
    rank = 0
    for row in rows:
        r = {c: v for c, v in row.items() if not is_zero(v)}
        while r:
            col = min(r)
            if col in pivots:
                f = r[col]
                prow = pivots[col]
                for c, v in prow.items():
                    nv = r.get(c, 0) - f * v
                    if is_zero(nv):
                        r.pop(c, None)
                    else:
                        r[c] = nv
            else:
                f = inverse(r[col])
                pivots[col] = {c: v * f for c, v in r.items()}
                rank += 1
                break
    return rank


def coordinate_rows(vectors: list[dict]) -> list[dict]:
    """Expand vectors with Laurent-polynomial entries into rational coordinates
    (one coordinate per (position, monomial)), renumbered as integers."""
    colmap: dict = {}
    out = []

    def col(key):
        if key not in colmap:
            colmap[key] = len(colmap)
        return colmap[key]

    for vec in vectors:
        row: dict = {}
        for pos, v in vec.items():
            if isinstance(v, (LaurentX, LaurentQ)):
                for mono, c in v.t:
                    const = mono == 0 or (isinstance(mono, tuple) and not any(mono))
                    row[col((pos, None if const else mono))] = c
            elif not is_zero(v):
                row[col((pos, None))] = v
        out.append(row)
    return out


def renumber(vectors: list[dict]) -> list[dict]:
    """Map arbitrary hashable column keys to integers so pivots can be ordered."""
    colmap: dict = {}
    out = []
    for vec in vectors:
        out.append({colmap.setdefault(k, len(colmap)): v for k, v in vec.items()})
    return out

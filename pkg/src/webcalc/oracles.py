"""Brute-force reference operators built straight from basis vectors,
with no web in sight.  Used to certify the diagrammatic constructions."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import permutations, product
from math import factorial

from .evaluator import SparseOperator
from .scalars import zeta_power
from .webcore import ups


def _vec(colors):
    return tuple((c,) for c in colors)


def diagonal_projector(m: int, N: int, keep) -> SparseOperator:
    """Projection onto span{v_c : keep(c)} on m upward 1-strands."""
    obj = ups(*[1] * m)
    ent = [(_vec(c), _vec(c), Fraction(1)) for c in product(range(1, N + 1), repeat=m) if keep(c)]
    return SparseOperator.from_entries(obj, obj, N, ent)


def extremal(m: int, N: int) -> SparseOperator:
    return diagonal_projector(m, N, lambda c: len(set(c)) == 1)


def distinct(m: int, N: int) -> SparseOperator:
    return diagonal_projector(m, N, lambda c: len(set(c)) == m)


def block_orbit(parts, N: int) -> SparseOperator:
    """Colors constant on consecutive blocks, pairwise distinct across blocks."""
    bounds, pos = [], 0
    for p in parts:
        bounds.append((pos, pos + p))
        pos += p

    def keep(c):
        heads = [c[a] for a, _ in bounds]
        return all(len(set(c[a:b])) == 1 for a, b in bounds) and len(set(heads)) == len(heads)
    return diagonal_projector(pos, N, keep)


def line_projector(N: int, k: int) -> SparseOperator:
    return diagonal_projector(1, N, lambda c: c[0] == k)


def fourier_projector(N: int, k: int) -> SparseOperator:
    """(1/N) sum_j zeta^{-kj} diag(zeta^{j}, ..., zeta^{Nj}) entry by entry."""
    obj = ups(1)
    ent = []
    for b in range(1, N + 1):
        s = sum((zeta_power(N, (b - k) * j) for j in range(N)), Fraction(0))
        ent.append((((b,),), ((b,),), s * Fraction(1, N)))
    return SparseOperator.from_entries(obj, obj, N, ent)


def permutation_operator(m: int, N: int, perm) -> SparseOperator:
    """v_{c_1..c_m} -> v_{c_perm^{-1}(1)..}: strand i moves to slot perm[i]."""
    obj = ups(*[1] * m)
    ent = []
    for c in product(range(1, N + 1), repeat=m):
        out = [None] * m
        for i, j in enumerate(perm):
            out[j] = c[i]
        ent.append((_vec(out), _vec(c), Fraction(1)))
    return SparseOperator.from_entries(obj, obj, N, ent)


def symmetrizer(m: int, N: int, signed: bool = False) -> SparseOperator:
    obj = ups(*[1] * m)
    total = SparseOperator.zero(obj, obj, N)
    for perm in permutations(range(m)):
        inv = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        sgn = -1 if (signed and inv % 2) else 1
        total = total + permutation_operator(m, N, perm).scale(Fraction(sgn))
    return total.scale(Fraction(1, factorial(m)))


def weight_preserving_dim(n: int, N: int) -> int:
    """Dimension of the weight-preserving endomorphisms of V^{(x)n}: count
    pairs of color tuples with equal content."""
    tuples = list(product(range(1, N + 1), repeat=n))
    return sum(1 for a in tuples for b in tuples if Counter(a) == Counter(b))

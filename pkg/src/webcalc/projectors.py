"""Idempotents of the annular web algebra on 1-labelled strands.

Everything here is a web expression; the operators are obtained through the
evaluator.  Brute-force counterparts live in :mod:`webcalc.oracles`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .evaluator import EvalConfig, SparseOperator, evaluate
from .scalars import Mode, zeta_power
from .webcore import (
    DOWN, UP, BoundaryObject, CapRight, Crossing, CupLeft, Id, Merge, Rotate, Split, Strand,
    WebError, WebExpr, Word, Wrap, compose, compose_all, identity, lin, tensor, tensor_all, ups,
)


def strands(m: int) -> BoundaryObject:
    return ups(*[1] * m)


def id_m(m: int) -> Word:
    return identity(strands(m))


def _ids(obj):
    return [Id(s.label, s.orient) for s in obj]


def place(obj: BoundaryObject, i: int, gen) -> Word:
    """One-slice word with ``gen`` starting at strand i (1-based)."""
    obj = tuple(obj)
    w = len(gen.src)
    if tuple(gen.src) != obj[i - 1:i - 1 + w]:
        raise WebError(f"generator does not fit at position {i}")
    return Word(obj, [_ids(obj[:i - 1]) + [gen] + _ids(obj[i - 1 + w:])])


def wrap_at(m: int, i: int, p: int) -> Word:
    if p == 0:
        return id_m(m)
    return place(strands(m), i, Wrap(1, UP, p))


def rot(m: int, p: int = 1) -> Word:
    """The global rotation D^p on m strands."""
    obj = strands(m)
    return Word(obj, [[Rotate(p, obj)]]) if p else Word(obj)


def s(m: int, i: int) -> Word:
    """Crossing of strands i and i+1; i = m is the seam crossing D^-1 s_{m-1} D."""
    if 1 <= i < m:
        return place(strands(m), i, Crossing(1, 1, "+"))
    if i == m and m >= 2:
        return compose_all(rot(m, -1), s(m, m - 1), rot(m, 1))
    raise WebError(f"no crossing s_{i} on {m} strands")


def u(m: int, i: int) -> WebExpr:
    """u_i = id - s_i."""
    return id_m(m) - s(m, i)


def dumbbell(m: int, i: int) -> Word:
    """Split after merge through a 2-labelled edge at strands i, i+1."""
    obj = strands(m)
    mid = obj[:i - 1] + (Strand(2, UP),) + obj[i + 1:]
    return compose(place(mid, i, Split(1, 1)), place(obj, i, Merge(1, 1)))


def permutation_word(obj: BoundaryObject, perm) -> Word:
    """Crossings sending strand i to slot perm[i] (0-based), bubbling each
    target slot from the left."""
    obj = tuple(obj)
    m = len(obj)
    inv = [None] * m
    for i, j in enumerate(perm):
        inv[j] = i
    cur = list(range(m))
    slices = []
    for j in range(m):
        p = cur.index(inv[j])
        while p > j:
            a, b = obj[cur[p - 1]], obj[cur[p]]
            here = [obj[x] for x in cur]
            slices.append(_ids(here[:p - 1]) + [Crossing(a.label, b.label, "+", (a.orient, b.orient))]
                          + _ids(here[p + 1:]))
            cur[p - 1], cur[p] = cur[p], cur[p - 1]
            p -= 1
    return Word(obj, slices)


# ------------------------------------------------------------ projectors

def eigenprojector_P(N: int, k: int, m: int = 1, i: int = 1) -> WebExpr:
    """P_k(D) = (1/N) sum_j zeta^{-kj} D^j on strand i of m."""
    terms = [(zeta_power(N, -k * j) * Fraction(1, N), wrap_at(m, i, j)) for j in range(N)]
    return lin(terms)


def T2(N: int) -> WebExpr:
    obj = strands(2)
    terms = []
    for k in range(N):
        w = Word(obj, [[Wrap(1, UP, -k), Wrap(1, UP, k)]]) if k else Word(obj)
        terms.append((Fraction(1, N), w))
    return lin(terms)


@lru_cache(maxsize=None)
def extremal_T(N: int, m: int) -> WebExpr:
    """T_{m+1} = (id_{m-1} (x) T_2)(T_m (x) id_1)."""
    if m < 1:
        raise WebError("T_m needs m >= 1")
    if m == 1:
        return id_m(1)
    if m == 2:
        return T2(N)
    return compose(tensor(id_m(m - 2), T2(N)), tensor(extremal_T(N, m - 1), id_m(1)))


@lru_cache(maxsize=None)
def extremal_T_alt(N: int, m: int) -> WebExpr:
    """T_m = (T_{m-1} (x) 1) s_{m-1} (T_{m-1} (x) 1), from T_2 upwards."""
    if m <= 2:
        return extremal_T(N, m)
    side = tensor(extremal_T_alt(N, m - 1), id_m(1))
    return compose_all(side, s(m, m - 1), side)


def T0_scalar() -> Fraction:
    """Value given to T_0 where the partial-trace identity needs it."""
    return Fraction(2)


def merge_chain(m: int) -> Word:
    """Merge strands 2..m one at a time into the growing left edge."""
    slices = []
    for j in range(1, m):
        slices.append([Merge(j, 1)] + [Id(1)] * (m - j - 1))
    return Word(strands(m), slices)


def split_chain(m: int) -> Word:
    slices = []
    for j in range(m - 1, 0, -1):
        slices.append([Split(j, 1)] + [Id(1)] * (m - j - 1))
    return Word((Strand(m, UP),), slices)


@lru_cache(maxsize=None)
def clasp_anti(m: int) -> WebExpr:
    if m == 1:
        return id_m(1)
    fact = 1
    for j in range(2, m + 1):
        fact *= j
    return lin([(Fraction(1, fact), compose(split_chain(m), merge_chain(m)))])


@lru_cache(maxsize=None)
def clasp_sym(m: int) -> WebExpr:
    """P_{m+1} = P_m (x) 1 - m/(m+1) (P_m (x) 1) u_m (P_m (x) 1), u_m the dumbbell."""
    if m == 1:
        return id_m(1)
    k = m - 1
    side = tensor(clasp_sym(k), id_m(1))
    corr = compose_all(side, dumbbell(m, k), side)
    return side - Fraction(k, m) * corr


def clasp_sym_mixed(m: int) -> WebExpr:
    """P_{m+1} = P_m (x) 1 - 2m/(m+1) (P_m (x) 1)(id (x) V_2)(P_m (x) 1)."""
    if m == 1:
        return id_m(1)
    k = m - 1
    side = tensor(clasp_sym(k), id_m(1))
    mid = tensor(id_m(k - 1), clasp_anti(2))
    return side - Fraction(2 * k, m) * compose_all(side, mid, side)


def clasp_anti_mixed(m: int) -> WebExpr:
    """V_{m+1} = V_m (x) 1 - 2m/(m+1) (V_m (x) 1)(id (x) P_2)(V_m (x) 1)."""
    if m == 1:
        return id_m(1)
    k = m - 1
    side = tensor(clasp_anti(k), id_m(1))
    mid = tensor(id_m(k - 1), clasp_sym(2))
    return side - Fraction(2 * k, m) * compose_all(side, mid, side)


@lru_cache(maxsize=None)
def orbit_O(N: int, n: int) -> WebExpr:
    """O_2 = id - T_2, O_{n+1} = s_1 (1 (x) O_n) s_1 (1 (x) O_n)(O_n (x) 1)."""
    if n == 1:
        return id_m(1)
    if n == 2:
        return id_m(2) - T2(N)
    prev = orbit_O(N, n - 1)
    right = tensor(id_m(1), prev)
    return compose_all(s(n, 1), right, s(n, 1), right, tensor(prev, id_m(1)))


def _block_gather(parts) -> list[int]:
    """Slots for a permutation sending the last strand of every block to the
    tail (in block order) and everything else, in order, to the front."""
    n = sum(parts)
    last, pos = set(), 0
    for p in parts:
        pos += p
        last.add(pos - 1)
    front = [i for i in range(n) if i not in last]
    tail = sorted(last)
    perm = [0] * n
    for slot, i in enumerate(front + tail):
        perm[i] = slot
    return perm


def partition_idempotent(N: int, parts) -> WebExpr:
    parts = tuple(p for p in parts if p)
    k, n = len(parts), sum(parts)
    if k > N:
        raise WebError(f"a partition with {k} parts needs N >= {k}")
    blocks = tensor_all(*[extremal_T(N, p) for p in parts])
    if k == 1:
        return blocks
    perm = _block_gather(parts)
    inv = [0] * n
    for i, j in enumerate(perm):
        inv[j] = i
    sigma = permutation_word(strands(n), perm)
    sigma_inv = permutation_word(strands(n), inv)
    middle = tensor(id_m(n - k), orbit_O(N, k)) if n > k else orbit_O(N, k)
    return compose_all(blocks, sigma_inv, middle, sigma, blocks)


# ------------------------------------------------------- block equivalences

def lambda_shift(e: WebExpr, N: int) -> WebExpr:
    """Superpose an upward N-labelled strand on the right."""
    return tensor(e, identity((Strand(N, UP),)))


def lambda_star(e: WebExpr, N: int) -> WebExpr:
    return tensor(e, identity((Strand(N, DOWN),)))


def unit_zigzag(obj: BoundaryObject, N: int) -> tuple[Word, Word]:
    """The pair X -> X N^ Nv and back realizing id = lambda* lambda on X."""
    obj = tuple(obj)
    into = Word(obj, [_ids(obj) + [CupLeft(N)]])
    out = Word(obj + (Strand(N, UP), Strand(N, DOWN)), [_ids(obj) + [CapRight(N)]])
    return into, out


# ---------------------------------------------------------- spanning set

def greedy_permutation(eps, eps_prime) -> list[int]:
    """sigma with eps'_{sigma(i)} = eps_i, taking the smallest free slot."""
    used, perm = set(), []
    for e in eps:
        r = next(r for r in range(len(eps_prime)) if r not in used and eps_prime[r] == e)
        used.add(r)
        perm.append(r)
    return perm


def spanning_element(N: int, eps, eps_prime) -> WebExpr:
    """sigma P_{eps_n}(w_n) ... P_{eps_1}(w_1)."""
    n = len(eps)
    body = compose_all(*[eigenprojector_P(N, eps[i], n, i + 1) for i in reversed(range(n))])
    return compose(permutation_word(strands(n), greedy_permutation(eps, eps_prime)), body)


def content_pairs(N: int, n: int):
    tuples = list(product(range(1, N + 1), repeat=n))
    return [(a, b) for a in tuples for b in tuples if sorted(a) == sorted(b)]


# ---------------------------------------------------------- named handles

@dataclass
class ProjectorHandle:
    kind: str
    params: tuple
    expr: WebExpr
    _ops: dict = field(default_factory=dict, repr=False)

    def operator(self, cfg: EvalConfig) -> SparseOperator:
        if cfg not in self._ops:
            self._ops[cfg] = evaluate(self.expr, cfg)
        return self._ops[cfg]

    def certify(self, N: int) -> bool:
        op = self.operator(EvalConfig(N, Mode.ZETA))
        return op @ op == op


KINDS = {
    "T": lambda N, a: extremal_T(N, int(a)),
    "Talt": lambda N, a: extremal_T_alt(N, int(a)),
    "P": lambda N, a: eigenprojector_P(N, int(a)),
    "Pclasp": lambda N, a: clasp_sym(int(a)),
    "Vclasp": lambda N, a: clasp_anti(int(a)),
    "O": lambda N, a: orbit_O(N, int(a)),
    "part": lambda N, a: partition_idempotent(N, tuple(int(x) for x in a.split("+"))),
}


def lookup(key: str, N: int) -> ProjectorHandle:
    """Named projector, e.g. ``T:3``, ``P:2``, ``Vclasp:2``, ``O:3``, ``part:2+1``."""
    kind, _, arg = key.partition(":")
    if kind not in KINDS or not arg:
        raise KeyError(f"unknown projector {key!r}; kinds: {', '.join(KINDS)}")
    return ProjectorHandle(kind, (N, arg), KINDS[kind](N, arg))


# ------------------------------------------------------------- suites

def _p(N, **kw):
    return {"N": N, **kw}


def tm_checks(N: int, max_m: int = 5) -> list:
    """Extremal projector identities at q = 1, each against an oracle or
    a second construction."""
    from . import oracles
    from .checks import check_equal, check_true
    from .evaluator import rank

    cfg = EvalConfig(N, Mode.ZETA)
    ev = lambda e: evaluate(e, cfg)  # noqa: E731
    out = []
    for k in range(1, N + 1):
        out.append(check_equal("tm", "P-fourier", _p(N, k=k), eigenprojector_P(N, k),
                               oracles.fourier_projector(N, k), cfg))
        for l in range(1, N + 1):
            lhs = compose(eigenprojector_P(N, k), eigenprojector_P(N, l))
            rhs = ev(eigenprojector_P(N, k)) if k == l else SparseOperator.zero(strands(1), strands(1), N)
            out.append(check_equal("tm", "P-orthogonal", _p(N, k=k, l=l), lhs, rhs, cfg))
    out.append(check_equal("tm", "P-resolution", _p(N),
                           lin([(1, eigenprojector_P(N, k)) for k in range(1, N + 1)]), id_m(1), cfg))
    for m in range(1, max_m + 1):
        T = ev(extremal_T(N, m))
        out.append(check_equal("tm", "T-oracle", _p(N, m=m), T, oracles.extremal(m, N), cfg))
        out.append(check_true("tm", "T-rank", _p(N, m=m), lambda T=T: (rank(T) == N, f"rank {rank(T)}")))
        out.append(check_equal("tm", "idempotent", _p(N, m=m), T @ T, T, cfg))
        out.append(check_equal("tm", "projexpand", _p(N, m=m), T, lin(
            [(1, tensor_all(*[eigenprojector_P(N, k)] * m)) for k in range(1, N + 1)]), cfg))
        if m >= 3:
            out.append(check_equal("tm", "recursions-agree", _p(N, m=m), extremal_T_alt(N, m), T, cfg))
        for n in range(2, m):
            for k in range(0, m - n + 1):
                inner = tensor_all(*[e for e in (id_m(k) if k else None, extremal_T(N, n),
                                                 id_m(m - n - k) if m - n - k else None) if e is not None])
                I = ev(inner)
                out.append(check_equal("tm", "absorb", _p(N, m=m, n=n, k=k), T @ I, T, cfg))
                out.append(check_equal("tm", "absorb-left", _p(N, m=m, n=n, k=k), I @ T, T, cfg))
        for k in range(1, m):
            for l in range(m - k + 1, m):
                lhs = compose(tensor(extremal_T(N, k), id_m(m - k)), tensor(id_m(m - l), extremal_T(N, l)))
                out.append(check_equal("tm", "overlap", _p(N, m=m, k=k, l=l), lhs, T, cfg))
        if m >= 2:
            for i in range(1, m + 1):
                S, U = ev(s(m, i)), ev(u(m, i))
                Z = SparseOperator.zero(T.src, T.tgt, N)
                out.append(check_equal("tm", "absorb-s", _p(N, m=m, i=i), T @ S, T, cfg))
                out.append(check_equal("tm", "absorb-s-left", _p(N, m=m, i=i), S @ T, T, cfg))
                out.append(check_equal("tm", "kill-u", _p(N, m=m, i=i), T @ U, Z, cfg))
                out.append(check_equal("tm", "kill-u-left", _p(N, m=m, i=i), U @ T, Z, cfg))
        out.append(check_equal("tm", "rotation-invariant", _p(N, m=m),
                               compose_all(rot(m, -1), extremal_T(N, m), rot(m, 1)), T, cfg))
        for a in range(1, m):
            b = m - a
            if m >= 3:
                side = tensor(extremal_T(N, a), extremal_T(N, b))
                out.append(check_equal("tm", "linkedproj", _p(N, m=a, n=b),
                                       compose_all(side, s(m, a), side), T, cfg))
    t2 = T2(N)
    out.append(check_equal("tm", "T2-commute", _p(N),
                           compose(tensor(id_m(1), t2), tensor(t2, id_m(1))),
                           compose(tensor(t2, id_m(1)), tensor(id_m(1), t2)), cfg))
    out.append(check_equal("tm", "Ttwo-expand", _p(N), t2, lin(
        [(1, tensor(eigenprojector_P(N, k), eigenprojector_P(N, k))) for k in range(1, N + 1)]), cfg))
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            pab = tensor(eigenprojector_P(N, a), eigenprojector_P(N, b))
            rhs = ev(pab) if a == b else SparseOperator.zero(strands(2), strands(2), N)
            out.append(check_equal("tm", "extrabs", _p(N, a=a, b=b), compose(pab, t2), rhs, cfg))
        pkk = tensor(eigenprojector_P(N, a), eigenprojector_P(N, a))
        out.append(check_equal("tm", "crossabs", _p(N, k=a), compose(s(2, 1), pkk), pkk, cfg))
    return out


def clasp_checks(N: int, max_m: int = 4) -> list:
    from . import oracles
    from .checks import check_equal, check_true
    from .evaluator import rank
    from math import comb

    cfg = EvalConfig(N, Mode.ZETA)
    out = []
    for m in range(1, max_m + 1):
        P, V = evaluate(clasp_sym(m), cfg), evaluate(clasp_anti(m), cfg)
        out.append(check_equal("clasps", "sym-oracle", _p(N, m=m), P, oracles.symmetrizer(m, N), cfg))
        out.append(check_equal("clasps", "anti-oracle", _p(N, m=m), V, oracles.symmetrizer(m, N, True), cfg))
        out.append(check_true("clasps", "anti-rank", _p(N, m=m),
                              lambda V=V, m=m: (rank(V) == comb(N, m), f"rank {rank(V)}")))
        out.append(check_equal("clasps", "sym-mixed", _p(N, m=m), clasp_sym_mixed(m), P, cfg))
        out.append(check_equal("clasps", "anti-mixed", _p(N, m=m), clasp_anti_mixed(m), V, cfg))
    for n in range(1, N + 1):
        out.append(check_equal("clasps", "orbit-oracle", _p(N, n=n), orbit_O(N, n), oracles.distinct(n, N), cfg))
    for parts in ((2,), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 1, 1), (2, 1, 1)):
        if len(parts) > N or sum(parts) > 4:
            continue
        out.append(check_equal("clasps", "partition-oracle", _p(N, parts="+".join(map(str, parts))),
                               partition_idempotent(N, parts), oracles.block_orbit(parts, N), cfg))
    # block equivalences
    one = strands(1)
    into, back = unit_zigzag(one, N)
    out.append(check_equal("clasps", "lambda-unit", _p(N), compose(back, into), id_m(1), cfg))
    out.append(check_equal("clasps", "lambda-counit", _p(N), compose(into, back), identity(back.source), cfg))
    e = eigenprojector_P(N, 1)
    ee = lambda_star(lambda_shift(e, N), N)
    out.append(check_equal("clasps", "lambda-natural", _p(N), compose_all(back, ee, into), e, cfg))
    out.append(check_true("clasps", "lambda-target", _p(N),
                          lambda: lambda_shift(id_m(1), N).target == (Strand(1, UP), Strand(N, UP))))
    out.append(check_equal("clasps", "lambda-kron", _p(N), lambda_shift(e, N),
                           evaluate(e, cfg).kron(SparseOperator.identity((Strand(N, UP),), N)), cfg))
    return out


def spanning_checks(N: int, max_n: int = 3) -> list:
    from . import oracles
    from .checks import check_true
    from .evaluator import linear_span_dim

    cfg = EvalConfig(N, Mode.ZETA)
    out = []
    for n in range(1, max_n + 1):
        def run(n=n):
            ops = [evaluate(spanning_element(N, a, b), cfg) for a, b in content_pairs(N, n)]
            got, want = linear_span_dim(ops), oracles.weight_preserving_dim(n, N)
            return got == want, f"span {got}, expected {want}"
        out.append(check_true("spanning", "rank", _p(N, n=n), run))
    return out

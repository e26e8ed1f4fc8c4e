"""Endomorphisms of the 2-labelled upward strand and of two 1-strands.

On the 2-strand: E_k (a through-strand with a k-circle around the core),
D_2, B_1 (fixed by calibration), B_k and A_k (diagrammatic and recursive).
On two 1-strands: u, s, t = D^-1 s D, v = id - t, R_{2k-1}, S_x, X_n, Y_n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .annular import essential_circle
from .checks import CheckResult, check_equal, check_true
from .evaluator import EvalConfig, SparseOperator, evaluate
from .projectors import T2, dumbbell, id_m, rot, s as crossing_s, strands
from .scalars import Mode
from .webcore import (
    DOWN, UP, CapLeft, CapRight, Crossing, CupLeft, CupRight, Id, Merge, Rotate, Split, Strand,
    WebError, WebExpr, Word, Wrap, compose, compose_all, identity, lin, tensor,
)

TWO = (Strand(2, UP),)
PAIR = strands(2)


def _zero(obj, N):
    return SparseOperator.zero(obj, obj, N)


# ------------------------------------------------------------ on the 2-strand

def id2() -> Word:
    return identity(TWO)


def D2(p: int = 1) -> Word:
    return Word(TWO, [[Rotate(p, TWO)]])


def E(k: int) -> WebExpr:
    """A k-labelled essential circle beside the 2-strand."""
    return tensor(id2(), essential_circle(k))


def B_diagram(k: int) -> Word:
    """B_k for k >= 3: a (k-2)-circle merged into the 2-strand, wrapped once."""
    r = k - 2
    return Word(TWO, [
        [CupRight(r), Id(2)],
        [Id(r, DOWN), Merge(r, 2)],
        [Id(r, DOWN), Wrap(k, UP, 1)],
        [Id(r, DOWN), Split(r, 2)],
        [CapLeft(r), Id(2)],
    ])


def A_diagram(k: int) -> Word:
    """A_k for k >= 3: the (k-2)-circle passes around the core on its own
    and meets the 2-strand through a merge and a split."""
    r = k - 2
    return Word(TWO, [
        [Id(2), CupLeft(r)],
        [Id(2), Wrap(r, UP, 1), Id(r, DOWN)],
        [Merge(2, r), Id(r, DOWN)],
        [Split(2, r), Id(r, DOWN)],
        [Id(2), CapRight(r)],
    ])


def S_word() -> Word:
    return Word(TWO, [[Split(1, 1)]])


def M_word() -> Word:
    return Word(PAIR, [[Merge(1, 1)]])


@dataclass(frozen=True)
class B1Candidate:
    leg: int
    power: int
    swap: bool

    def word(self) -> Word:
        wraps = [Wrap(1, UP, self.power), Id(1)] if self.leg == 1 else [Id(1), Wrap(1, UP, self.power)]
        sl = [[Split(1, 1)], wraps]
        if self.swap:
            sl.append([Crossing(1, 1, "+")])
        sl.append([Merge(1, 1)])
        return Word(TWO, sl)

    def label(self) -> str:
        return f"leg={self.leg},wrap={self.power:+d},swap={int(self.swap)}"


CANDIDATES = tuple(B1Candidate(leg, p, sw) for leg in (1, 2) for p in (1, -1) for sw in (False, True))


# ------------------------------------------------------------ on two strands

def u() -> Word:
    return dumbbell(2, 1)


def s() -> Word:
    return crossing_s(2, 1)


def D(p: int = 1) -> Word:
    return rot(2, p)


def t() -> WebExpr:
    return compose_all(D(-1), s(), D(1))


def v() -> WebExpr:
    return id_m(2) - t()


def R(n: int) -> WebExpr:
    """(id - v)(id - u)...(id - v), n factors, n odd."""
    if n < 1 or n % 2 == 0:
        raise WebError("R needs an odd positive length")
    a, b = id_m(2) - v(), id_m(2) - u()
    factors = [a if j % 2 == 0 else b for j in range(n)]
    return compose_all(*factors)


def S_sum(x: int) -> WebExpr:
    if x <= 0:
        return lin([(0, id_m(2))])
    return lin([(1, R(2 * k - 1)) for k in range(1, x + 1)])


def Y(n: int) -> WebExpr:
    uu = u()
    if n % 2:
        return uu - compose_all(uu, S_sum((n - 1) // 2), uu)
    return uu - compose(R(n - 1), uu) - compose_all(uu, S_sum(n // 2 - 1), uu)


def alternating(k: int) -> WebExpr:
    """... v u v u with k factors, u applied first."""
    fs = [u() if j % 2 == 0 else v() for j in range(k)]
    return compose_all(*reversed(fs))


# ------------------------------------------------------------ the algebra

class End2:
    """Calibrated elements for one N (ZETA mode)."""

    def __init__(self, N: int):
        self.N = N
        self.cfg = EvalConfig(N, Mode.ZETA)
        self.calibration = self._calibrate()

    def op(self, e) -> SparseOperator:
        return e if isinstance(e, SparseOperator) else evaluate(e, self.cfg)

    def _calibrate(self):
        """Pick B_1 among the leg/wrap/swap candidates by vu = D^-1 S B_1 M."""
        target = self.op(alternating(2))
        S, M, Dm = self.op(S_word()), self.op(M_word()), self.op(D(-1))
        hits, values = [], {}
        for c in CANDIDATES:
            b = self.op(c.word())
            values[c] = b
            if Dm @ S @ b @ M == target:
                hits.append(c)
        distinct = {values[c] for c in hits}
        return {"hits": hits, "distinct": len(distinct), "values": values,
                "B1": values[hits[0]] if len(distinct) == 1 else None,
                "word": hits[0].word() if hits else None}

    @property
    def B1(self) -> SparseOperator:
        b = self.calibration["B1"]
        if b is None:
            raise WebError(f"B_1 calibration failed: {len(self.calibration['hits'])} candidates, "
                           f"{self.calibration['distinct']} distinct values")
        return b

    def D2(self, p: int = 1) -> SparseOperator:
        return self.op(D2(p))

    def E(self, k: int) -> SparseOperator:
        if k > self.N:
            return _zero(TWO, self.N)
        return self.op(E(k))

    @lru_cache(maxsize=None)
    def A(self, k: int) -> SparseOperator:
        """A_1 = 0, A_2 = id, A_3 = B_1, A_k = B_1 A_{k-1} - A_{k-2} D_2."""
        if k == 1:
            return _zero(TWO, self.N)
        if k == 2:
            return self.op(id2())
        if k == 3:
            return self.B1
        return self.B1 @ self.A(k - 1) - self.A(k - 2) @ self.D2()

    def A_diagram(self, k: int) -> SparseOperator:
        return self.op(A_diagram(k))

    def B(self, k: int) -> SparseOperator:
        if k == 1:
            return self.B1
        if k == 2:
            return self.D2()
        return self.op(B_diagram(k))

    def X(self, n: int) -> SparseOperator:
        return self.op(D(1 - n)) @ self.op(S_word()) @ self.A(n + 1) @ self.op(M_word())

    def Y(self, n: int) -> SparseOperator:
        return self.op(Y(n))


def end2_checks(N: int) -> list[CheckResult]:
    alg = End2(N)
    cfg, op = alg.cfg, alg.op
    P = lambda **kw: {"N": N, **kw}  # noqa: E731
    out = []
    cal = alg.calibration
    out.append(check_true("end2", "B1-calibration", P(),
                          lambda: (len(cal["hits"]) > 0 and cal["distinct"] == 1,
                                   f"{len(cal['hits'])} hits, {cal['distinct']} distinct values: "
                                   + "; ".join(c.label() for c in cal["hits"]))))
    if cal["B1"] is None:
        return out
    I2, Z2 = op(id2()), _zero(TWO, N)
    sign = Fraction((-1) ** (N - 1))
    for k in range(1, N + 1):
        out.append(check_equal("end2", "E-value", P(k=k), alg.E(k), I2.scale(sign) if k == N else Z2, cfg))
    Dp, Dm = alg.D2(), alg.D2(-1)
    out.append(check_equal("end2", "D2-invertible", P(), Dp @ Dm, I2, cfg))
    for name, x in (("B1", alg.B1), ("E1", alg.E(1)), ("B3", alg.B(3) if N >= 3 else Z2)):
        out.append(check_equal("end2", "D2-central", P(x=name), Dp @ x, x @ Dp, cfg))
    for k in range(3, N + 2):
        out.append(check_equal("end2", "B-equals-AD", P(k=k), alg.B(k), alg.A(k) @ Dp, cfg))
        out.append(check_equal("end2", "A-diagram", P(k=k), alg.A_diagram(k), alg.A(k), cfg))
    for k in range(2, N + 1):
        rhs = -alg.E(k - 1) + alg.A(k - 1) @ Dp + alg.A(k + 1)
        out.append(check_equal("end2", "B1-recursion", P(k=k), alg.B1 @ alg.A(k), rhs, cfg))
    out.append(check_equal("end2", "B_N", P(), alg.B(N), alg.E(N), cfg))
    out.append(check_equal("end2", "A_N", P(), alg.A(N), Dm.scale(sign), cfg))
    out.append(check_equal("end2", "A_N+1", P(), alg.A(N + 1), Z2, cfg))
    if N >= 4:
        out.append(check_equal("end2", "A4", P(), alg.A(4), alg.B1 @ alg.B1 - Dp, cfg))
    # two 1-strands
    uu, ss = op(u()), op(s())
    I, Z = op(id_m(2)), _zero(PAIR, N)
    out.append(check_equal("end2", "SM-is-u", P(), uu, I - ss, cfg))
    for k in range(2, N + 2):
        rhs = op(D(1 - k)) @ op(S_word()) @ alg.B1.power(k - 1) @ op(M_word())
        out.append(check_equal("end2", "alternating", P(k=k), alternating(k), rhs, cfg))
    for n in range(2, N + 1):
        out.append(check_equal("end2", "X-equals-Y", P(n=n), alg.X(n), alg.Y(n), cfg))
    out.append(check_equal("end2", "X_N-zero", P(), alg.X(N), Z, cfg))
    if N >= 3:
        out.append(check_equal("end2", "X3", P(), alg.X(3), op(compose_all(u(), v(), u())) - uu, cfg))
    for k in range(1, N):
        iu = id_m(2) - u()
        out.append(check_equal("end2", "rflip", P(k=k), R(2 * k - 1),
                               compose_all(iu, R(2 * N - 2 * k - 1), iu), cfg))
    T = op(T2(N))
    out.append(check_equal("end2", "NT2u", P(), (T @ uu).scale(Fraction(N)), Z, cfg))
    ts = op(compose(id_m(2) - v(), id_m(2) - u()))
    out.append(check_equal("end2", "T2-rewrite", P(), T,
                           sum((ts.power(k) for k in range(1, N)), I).scale(Fraction(1, N)), cfg))
    out.append(check_equal("end2", "crossabs", P(), ss @ T, T, cfg))
    out.append(check_equal("end2", "crossabs-right", P(), T @ ss, T, cfg))
    out.append(check_equal("end2", "D-conjugate", P(), compose_all(D(-1), T2(N), D(1)), T, cfg))
    return out

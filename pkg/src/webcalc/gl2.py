"""Rank-two structure: generic-q relations, the partial trace through
splitter/merge webs, the idempotents e_{m,n} and skeleton dimensions.

Objects of the form lambda^n(X) put n upward 2-strands to the right of X.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .checks import CheckResult, check_equal, check_true, known
from .evaluator import EvalConfig, SparseOperator, evaluate, linear_span_dim, rank
from .projectors import dumbbell, extremal_T, id_m, permutation_word, rot, strands, wrap_at
from .relations import webrel_checks
from .scalars import Mode
from .webcore import (
    DOWN, UP, CapLeft, CapRight, Crossing, CupLeft, CupRight, Id, Merge, Split, Strand, WebError,
    WebExpr, Word, Wrap, compose, compose_all, identity, lin, tensor, winding_grade,
)

N2 = 2
ZETA = EvalConfig(N2, Mode.ZETA)
ONE, TWO = Strand(1, UP), Strand(2, UP)


def lam(k: int, m: int = 0) -> tuple:
    """The object lambda^k(1^m)."""
    return (ONE,) * m + (TWO,) * k


def id_obj(obj) -> Word:
    return identity(tuple(obj))


def T(m: int) -> WebExpr:
    """T_m for N = 2 with T_0 the empty identity."""
    return id_obj(()) if m == 0 else extremal_T(N2, m)


# ----------------------------------------------------------- relations

def gl2rel_checks() -> list[CheckResult]:
    """Circles, bigons and squares at generic q, N = 2."""
    cfg = EvalConfig(N2, Mode.Q_GENERIC)
    R = cfg.ring
    out = []
    for r in webrel_checks(N2):
        r.suite = "gl2rel"
        out.append(r)
    qq = R.quantum_int(2)
    for name, w in (("circle1-ccw", Word((), [[CupLeft(1)], [CapRight(1)]])),
                    ("circle1-cw", Word((), [[CupRight(1)], [CapLeft(1)]]))):
        out.append(check_equal("gl2rel", name, {}, w, lin([(qq, id_obj(()))]), cfg))
    for name, w in (("circle2-ccw", Word((), [[CupLeft(2)], [CapRight(2)]])),
                    ("circle2-cw", Word((), [[CupRight(2)], [CapLeft(2)]]))):
        out.append(check_equal("gl2rel", name, {}, w, id_obj(()), cfg))
    big = Word((TWO,), [[Split(1, 1)], [Merge(1, 1)]])
    out.append(check_equal("gl2rel", "bigon-11", {}, big, lin([(qq, id_obj((TWO,)))]), cfg))
    through = Word((ONE,), [[Id(1), CupLeft(1)], [Merge(1, 1), Id(1, DOWN)],
                            [Split(1, 1), Id(1, DOWN)], [Id(1), CapRight(1)]])
    out.append(check_equal("gl2rel", "bigon-through-2", {}, through, id_obj((ONE,)), cfg))
    return out


# ------------------------------------------------------ splitter / merge

@dataclass(frozen=True)
class PartialTraceConvention:
    leg: int     # which split output travels: 1 first, 2 second
    wrap: int    # wrap power on the traveller before it merges
    order: int   # 0 merges (stay, traveller); 1 merges (traveller, stay)

    def label(self) -> str:
        return f"leg={self.leg},wrap={self.wrap:+d},order={self.order}"


PLANAR = PartialTraceConvention(2, 0, 0)
CONVENTIONS = tuple(PartialTraceConvention(l, w, o) for l in (1, 2) for w in (-1, 0, 1) for o in (0, 1))


def _ids(obj):
    return [Id(s.label, s.orient) for s in obj]


def _slice(cur, pos, gen):
    w = len(gen.src)
    return _ids(cur[:pos]) + [gen] + _ids(cur[pos + w:])


def splitter(n: int, c: PartialTraceConvention = PLANAR) -> Word:
    """S_n : 2^n -> 1^{2n}, nested so that the i-th 2-strand feeds strands
    i and 2n+1-i."""
    cur = list(lam(n))
    slices = []
    for i in range(n):
        slices.append(_slice(cur, i, Split(1, 1)))
        cur[i:i + 1] = [ONE, ONE]
        if c.leg == 1:
            slices.append(_slice(cur, i, Crossing(1, 1, "+")))
        # the traveller (slot i+1) moves right past the remaining 2-strands
        for p in range(i + 1, i + 1 + (n - 1 - i)):
            slices.append(_slice(cur, p, Crossing(1, 2, "+")))
            cur[p], cur[p + 1] = cur[p + 1], cur[p]
    return Word(lam(n), slices)


def merger(n: int, c: PartialTraceConvention = PLANAR) -> Word:
    """M_n : 1^{2n} -> 2^n, the mirror of S_n, innermost pair first."""
    cur = [ONE] * (2 * n)
    slices = []
    for i in reversed(range(n)):
        # traveller sits at slot 2n-... after earlier merges: just right of the 2-strands
        t = i + 1 + (n - 1 - i)
        for p in range(t, i + 1, -1):
            slices.append(_slice(cur, p - 1, Crossing(2, 1, "+")))
            cur[p - 1], cur[p] = cur[p], cur[p - 1]
        if c.wrap:
            slices.append(_slice(cur, i + 1, Wrap(1, UP, c.wrap)))
        if c.order:
            slices.append(_slice(cur, i, Crossing(1, 1, "+")))
        slices.append(_slice(cur, i, Merge(1, 1)))
        cur[i:i + 2] = [TWO]
    return Word((ONE,) * (2 * n), slices)


def partial_trace(W: WebExpr, m: int, n: int, c: PartialTraceConvention = PLANAR) -> WebExpr:
    """pTr_n(W) = (id_{m-n} (x) M_n)(W (x) id_n)(id_{m-n} (x) S_n)."""
    if n > m:
        raise WebError("pTr_n needs n <= m")
    ident = lambda k: id_m(k) if k else id_obj(())  # noqa: E731
    return compose_all(tensor(ident(m - n), merger(n, c)), tensor(W, id_m(n)),
                       tensor(ident(m - n), splitter(n, c)))


def lam_T(n: int, m: int) -> WebExpr:
    """lambda^n(T_m), with the scalar 2 standing in for T_0."""
    if m == 0:
        return lin([(2, id_obj(lam(n)))])
    return tensor(T(m), id_obj(lam(n)))


@lru_cache(maxsize=None)
def calibrate_pTr() -> dict:
    targets = [(1, lam_T(1, 1)), (2, lam_T(2, 0))]
    hits, values = [], {}
    for c in CONVENTIONS:
        vals = tuple(evaluate(partial_trace(T(2), 2, n, c), ZETA) for n, _ in targets)
        values[c] = vals
        if all(v == evaluate(t, ZETA) for v, (_, t) in zip(vals, targets)):
            hits.append(c)
    distinct = {values[c] for c in hits}
    chosen = PLANAR if PLANAR in hits else (hits[0] if hits else None)
    return {"hits": hits, "distinct": len(distinct), "chosen": chosen if len(distinct) == 1 else None}


def convention() -> PartialTraceConvention:
    c = calibrate_pTr()["chosen"]
    if c is None:
        raise WebError("partial-trace calibration is not unique")
    return c


def S(n: int) -> Word:
    return splitter(n, convention())


def M(n: int) -> Word:
    return merger(n, convention())


def gl2ptr_checks(max_m: int = 4) -> list[CheckResult]:
    cal = calibrate_pTr()
    out = [check_true("gl2ptr", "calibration", {"candidates": len(CONVENTIONS)},
                      lambda: (cal["distinct"] == 1,
                               f"{len(cal['hits'])} hits, {cal['distinct']} distinct: "
                               + "; ".join(c.label() for c in cal["hits"])))]
    if cal["chosen"] is None:
        return out
    c = cal["chosen"]
    for m in range(1, max_m + 1):
        for n in range(1, m + 1):
            out.append(check_equal("gl2ptr", "Tptr", {"m": m, "n": n},
                                   partial_trace(T(m), m, n, c), lam_T(n, m - n), ZETA))
    for n in range(1, 4):
        out.append(check_equal("gl2ptr", "MS-bigons", {"n": n}, compose(M(n), S(n)),
                               lin([(2 ** n, id_obj(lam(n)))]), ZETA))
    return out


# ------------------------------------------------------------ e_{m,n}

def TT(m: int, n: int) -> WebExpr:
    return tensor(T(m), T(n)) if m and n else T(m or n)


@lru_cache(maxsize=None)
def e_mn(m: int, n: int) -> WebExpr:
    """Complement of T_{m+n} in T_m (x) T_n."""
    if m < 1 or n < 1:
        raise WebError("e_{m,n} needs m, n >= 1")
    if m == n == 1:
        uu = dumbbell(2, 1)
        return lin([(Fraction(1, 2), uu), (Fraction(1, 2), compose_all(rot(2, -1), uu, rot(2, 1)))])
    return compose_all(TT(m, n), dumbbell(m + n, m), TT(m, n))


def diffproj(m: int, n: int, r: int) -> WebExpr:
    mid = [x for x in (T(m - r) if m > r else None, compose(S(r), M(r)), T(n - r) if n > r else None)
           if x is not None]
    core = mid[0]
    for x in mid[1:]:
        core = tensor(core, x)
    return compose_all(TT(m, n), core, TT(m, n))


def block_swap(m: int) -> Word:
    """Exchange two blocks of m strands."""
    return permutation_word(strands(2 * m), [(i + m) % (2 * m) for i in range(2 * m)])


def kariso_lhs(m: int, n: int) -> WebExpr:
    left = lambda w: tensor(id_m(m - n), w) if m > n else w  # noqa: E731
    return compose_all(left(M(n)), TT(m, n), left(S(n)))


def parprod_maps(m: int, n: int):
    """For m > n: f from lambda^n(T_{m-n}) into T_m (x) T_n and g back."""
    f = compose(TT(m, n), tensor(T(m - n), S(n)))
    g = compose(tensor(T(m - n), M(n)), TT(m, n))
    return f, g


def parprod_maps_mirror(n: int, m: int):
    """For n < m: the same through 2^n (x) T_{m-n} on the left."""
    f = compose(TT(n, m), tensor(S(n), T(m - n)))
    g = compose(tensor(M(n), T(m - n)), TT(n, m))
    return f, g


def parprod2_maps(m: int):
    """phi_1, psi_1, phi_2, psi_2 for T_m (x) T_m."""
    TTm = TT(m, m)
    half = Fraction(1, 2)
    phi1 = compose(TTm, S(m))
    psi1 = lin([(half, compose(M(m), TTm))])
    SS = tensor(S(m - 1), S(1)) if m > 1 else S(1)
    MM = tensor(M(m - 1), M(1)) if m > 1 else M(1)
    phi2 = compose_all(TTm, rot(2 * m, -1), SS)
    psi2 = lin([(half, compose_all(MM, rot(2 * m, 1), TTm))])
    return phi1, psi1, phi2, psi2


def gl2emn_checks(max_total: int = 5) -> list[CheckResult]:
    out = []
    op = lambda e: evaluate(e, ZETA)  # noqa: E731
    for m in range(1, max_total):
        for n in range(1, max_total - m + 1):
            P = {"m": m, "n": n}
            e = op(e_mn(m, n))
            Tmn, Tsum = op(TT(m, n)), op(T(m + n))
            Z = SparseOperator.zero(e.src, e.tgt, N2)
            out.append(check_equal("gl2emn", "idempotent", P, e @ e, e, ZETA))
            out.append(check_equal("gl2emn", "decomposition", P, Tmn, Tsum + e, ZETA))
            out.append(check_equal("gl2emn", "orthogonal", P, e @ Tsum, Z, ZETA))
            out.append(check_equal("gl2emn", "orthogonal-rev", P, Tsum @ e, Z, ZETA))
            if m + n >= 3:
                for r in range(1, min(m, n) + 1):
                    res = check_equal("gl2emn", "diffproj", {**P, "r": r}, diffproj(m, n, r), e, ZETA)
                    if r == m == n:
                        out.append(known(res, "for r = m = n the block swap survives the compression"))
                        sg = (-1) ** m
                        fix = Tmn + (Tmn @ op(block_swap(m)) @ Tmn).scale(sg) + Tsum.scale(-1 - sg)
                        out.append(check_equal("gl2emn", "diffproj-blockswap", {**P, "r": r},
                                               diffproj(m, n, r), fix, ZETA))
                    else:
                        out.append(res)
            if n <= m:
                out.append(check_equal("gl2emn", "kariso", P, kariso_lhs(m, n), lam_T(n, m - n), ZETA))
            if m > n:
                f, g = parprod_maps(m, n)
                out.append(check_equal("gl2emn", "parprod-gf", P, compose(g, f), lam_T(n, m - n), ZETA))
                out.append(check_equal("gl2emn", "parprod-fg", P, compose(f, g), e, ZETA))
            if m < n:
                f, g = parprod_maps_mirror(m, n)
                out.append(check_equal("gl2emn", "parprod-gf", P, compose(g, f),
                                       tensor(id_obj(lam(m)), T(n - m)), ZETA))
                out.append(check_equal("gl2emn", "parprod-fg", P, compose(f, g), e, ZETA))
            if m == n:
                phi1, psi1, phi2, psi2 = map(op, parprod2_maps(m))
                I = op(id_obj(lam(m)))
                Z2 = SparseOperator.zero(I.src, I.tgt, N2)
                for (i, psi), (j, phi) in product(((1, psi1), (2, psi2)), ((1, phi1), (2, phi2))):
                    out.append(check_equal("gl2emn", "parprod2-psiphi", {**P, "i": i, "j": j},
                                           psi @ phi, I if i == j else Z2, ZETA))
                out.append(check_equal("gl2emn", "parprod2-sum", P, phi1 @ psi1 + phi2 @ psi2, e, ZETA))
    # the two halves of e_{1,1} are conjugate under the rotation
    u = op(dumbbell(2, 1))
    a = u.scale(Fraction(1, 2))
    b = op(compose_all(rot(2, -1), dumbbell(2, 1), rot(2, 1))).scale(Fraction(1, 2))
    out.append(check_true("gl2emn", "w-shift-shadow", {},
                          lambda: (rank(a) == rank(b) == 1 and a @ b == SparseOperator.zero(a.src, a.tgt, N2)
                                   and op(rot(2, -1)) @ a @ op(rot(2, 1)) == b,
                                   f"ranks {rank(a)}, {rank(b)}")))
    return out


# ------------------------------------------------------------ skeleton

def _grade_zero_words(m: int) -> list[WebExpr]:
    """Permutations and balanced wrap patterns on m strands."""
    words = []
    for perm in permutations(range(m)):
        words.append(permutation_word(strands(m), perm))
    for pw in product((-1, 0, 1), repeat=m):
        if sum(pw) != 0 or not any(pw):
            continue
        w = id_m(m)
        for i, p in enumerate(pw):
            w = compose(wrap_at(m, i + 1, p), w)
        words.append(w)
    for p in (1, -1):
        words.append(compose(rot(m, p), wrap_at(m, 1, -p)))
    return words


def webdecomp_ranks(max_m: int = 5) -> dict:
    """Summands of id_m from the branching rule, as (k, j) meaning
    lambda^k(T_j) (j >= 1) or a copy of lambda^k(empty) (j = 0).  Each
    summand's rank is read off from its idempotent."""
    decomp = {1: [(0, 1)]}
    for m in range(1, max_m):
        nxt = []
        for k, j in decomp[m]:
            if j == 0:
                nxt.append((k, 1))
            elif j > 1:
                nxt += [(k, j + 1), (k + 1, j - 1)]
            else:
                nxt += [(k, 2), (k + 1, 0), (k + 1, 0)]
        decomp[m + 1] = nxt
    return decomp


def _summand_rank(k: int, j: int) -> int:
    if j == 0:
        return rank(evaluate(id_obj(lam(k)), ZETA))
    return rank(evaluate(tensor(T(j), id_obj(lam(k))) if k else T(j), ZETA))


def gl2skel_checks(J: int = 3) -> list[CheckResult]:
    out = []
    fx = EvalConfig(N2, Mode.FORMAL_X)
    for m in (1, 2, 3):
        def indep(m=m):
            ops = [evaluate(compose(rot(m, j), T(m)), fx) for j in range(-J, J + 1)]
            d = linear_span_dim(ops)
            return d == 2 * J + 1, f"span dimension {d}"
        out.append(check_true("gl2skel", "formalX-independence", {"m": m, "J": J}, indep))
    for m in (1, 2, 3):
        def end_dim(m=m):
            words = _grade_zero_words(m)
            bad = [w for w in words if winding_grade(w) != 0]
            Tm = evaluate(T(m), ZETA)
            ops = [Tm @ evaluate(w, ZETA) @ Tm for w in words]
            d = linear_span_dim(ops)
            return d == 1 and not bad, f"span dimension {d}"
        out.append(check_true("gl2skel", "end-dimension", {"m": m}, end_dim))
    for m in (2, 3, 4):
        def hom_zero(m=m):
            target = evaluate(tensor(T(m - 2), id_obj(lam(1))) if m > 2 else id_obj(lam(1)), ZETA)
            into = tensor(id_m(m - 2), M(1)) if m > 2 else M(1)
            Tm = evaluate(T(m), ZETA)
            ops = [target @ evaluate(compose(into, w), ZETA) @ Tm
                   for w in _grade_zero_words(m) + [rot(m, 1), rot(m, -1)]]
            d = linear_span_dim(ops)
            return d == 0, f"span dimension {d}"
        out.append(check_true("gl2skel", "hom-vanishing", {"m": m}, hom_zero))
    dec = webdecomp_ranks(5)
    for m in range(1, 6):
        def total(m=m):
            s = sum(_summand_rank(k, j) for k, j in dec[m])
            return s == 2 ** m, f"rank sum {s}"
        out.append(check_true("gl2skel", "webdecomp-ranks", {"m": m}, total))
    return out

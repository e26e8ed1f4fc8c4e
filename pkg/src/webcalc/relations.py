"""Planar web relations and the braiding moves, as pairs of web expressions."""
from __future__ import annotations

from itertools import product

from .checks import CheckResult, check_equal, known
from .evaluator import EvalConfig
from .scalars import Mode, ScalarRing
from .webcore import (
    DOWN, UP, CapLeft, CapRight, Crossing, CupLeft, CupRight, Id, Merge, Split, Strand,
    WebExpr, Word, identity, lin,
)


def _ids(obj):
    return [Id(s.label, s.orient) for s in obj]


def ladder(k: int, l: int, first: tuple, second: tuple, orient: str = UP) -> Word | None:
    """Two-rung ladder on (k, l); each rung is ('lr'|'rl', amount), lower
    rung first.  Zero-labelled edges are omitted.  None if a rung would carry
    more than its source edge holds."""
    left, right = k, l
    slices = []

    def I(x):
        return [Id(x, orient)] if x else []

    for direction, amt in (first, second):
        if amt == 0:
            continue
        if direction == "lr":
            if amt > left:
                return None
            if amt < left:
                slices.append([Split(left - amt, amt, orient)] + I(right))
            if right:
                slices.append(I(left - amt) + [Merge(amt, right, orient)])
            left, right = left - amt, right + amt
        else:
            if amt > right:
                return None
            if amt < right:
                slices.append(I(left) + [Split(amt, right - amt, orient)])
            if left:
                slices.append([Merge(left, amt, orient)] + I(right - amt))
            left, right = left + amt, right - amt
    return Word((Strand(k, orient), Strand(l, orient)), slices)


def _mixed_side(k: int, l: int, lower_first: bool) -> WebExpr | None:
    """Rungs of label 1 between an upward k-strand and a downward l-strand."""
    src = (Strand(k, UP), Strand(l, DOWN))

    def in_then_out(kk, ll):
        # cup rung moving one unit from right to left, then cap rung moving it back
        return [
            [Id(kk), CupLeft(1), Id(ll, DOWN)],
            [Merge(kk, 1), Merge(1, ll, DOWN)],
            [Split(kk, 1), Split(1, ll, DOWN)],
            [Id(kk), CapRight(1), Id(ll, DOWN)],
        ]

    def out_then_in(kk, ll):
        # kk, ll: outer labels; inner labels are kk-1, ll-1
        if kk < 1 or ll < 1:
            return None
        sl = []
        sl.append(([Split(kk - 1, 1)] if kk > 1 else [Id(1)]) +
                  ([Split(1, ll - 1, DOWN)] if ll > 1 else [Id(1, DOWN)]))
        mid_left = [Id(kk - 1)] if kk > 1 else []
        mid_right = [Id(ll - 1, DOWN)] if ll > 1 else []
        sl.append(mid_left + [CapRight(1)] + mid_right)
        sl.append(mid_left + [CupLeft(1)] + mid_right)
        sl.append(([Merge(kk - 1, 1)] if kk > 1 else [Id(1)]) +
                  ([Merge(1, ll - 1, DOWN)] if ll > 1 else [Id(1, DOWN)]))
        return sl

    sl = in_then_out(k, l) if lower_first else out_then_in(k, l)
    if sl is None:
        return None
    return Word(src, sl)


# ------------------------------------------------------------------- suites

def _binom(R: ScalarRing, n: int, k: int):
    return R.quantum_binomial(n, k)


def webrel_checks(N: int, max_total: int | None = None) -> list[CheckResult]:
    cfg = EvalConfig(N, Mode.Q_GENERIC)
    R = cfg.ring
    tot = N + 2 if max_total is None else max_total
    out: list[CheckResult] = []
    S = "webrel"

    for o in (UP, DOWN):
        # bigon
        for k in range(1, tot):
            for l in range(1, tot - k + 1):
                w = Word((Strand(k + l, o),), [[Split(k, l, o)], [Merge(k, l, o)]])
                out.append(check_equal(S, "bigon", dict(N=N, k=k, l=l, o=o), w,
                                       lin([(_binom(R, k + l, k), identity((Strand(k + l, o),)))]), cfg))
        # associativity
        for k, l, m in product(range(1, tot), repeat=3):
            if k + l + m > tot:
                continue
            src = (Strand(k, o), Strand(l, o), Strand(m, o))
            a = Word(src, [[Merge(k, l, o), Id(m, o)], [Merge(k + l, m, o)]])
            b = Word(src, [[Id(k, o), Merge(l, m, o)], [Merge(k, l + m, o)]])
            out.append(check_equal(S, "merge-assoc", dict(N=N, k=k, l=l, m=m, o=o), a, b, cfg))
            t = (Strand(k + l + m, o),)
            a = Word(t, [[Split(k + l, m, o)], [Split(k, l, o), Id(m, o)]])
            b = Word(t, [[Split(k, l + m, o)], [Id(k, o), Split(l, m, o)]])
            out.append(check_equal(S, "split-assoc", dict(N=N, k=k, l=l, m=m, o=o), a, b, cfg))

    # blister, loop on the right and on the left
    for k in range(1, tot):
        for l in range(1, tot - k + 1):
            src = (Strand(k),)
            right = Word(src, [[Id(k), CupLeft(l)], [Merge(k, l), Id(l, DOWN)],
                               [Split(k, l), Id(l, DOWN)], [Id(k), CapRight(l)]])
            left = Word(src, [[CupRight(l), Id(k)], [Id(l, DOWN), Merge(l, k)],
                              [Id(l, DOWN), Split(l, k)], [CapLeft(l), Id(k)]])
            rhs = lin([(_binom(R, N - k, l), identity(src))])
            out.append(check_equal(S, "blister-right", dict(N=N, k=k, l=l), right, rhs, cfg))
            out.append(check_equal(S, "blister-left", dict(N=N, k=k, l=l), left, rhs, cfg))

    # square switch and its mirror image
    for k, l in product(range(1, tot), repeat=2):
        if k + l > tot:
            continue
        for a, b in product(range(0, tot + 1), repeat=2):
            if b > k or a > l + b or (a == 0 and b == 0):
                continue
            lhs = ladder(k, l, ("lr", b), ("rl", a))
            if lhs is None:
                continue
            terms = []
            bad = False
            for t in range(0, min(a, b) + 1):
                w = ladder(k, l, ("rl", a - t), ("lr", b - t))
                c = R.quantum_binomial(k - l + a - b, t)
                if w is None:
                    if c != 0:
                        bad = True
                    continue
                terms.append((c, w))
            if bad or not terms:
                continue
            out.append(check_equal(S, "square-switch", dict(N=N, k=k, l=l, a=a, b=b), lhs, lin(terms), cfg))
            # mirror: rungs reflected left/right
            lhs_m = ladder(l, k, ("rl", b), ("lr", a))
            terms_m = []
            for t in range(0, min(a, b) + 1):
                w = ladder(l, k, ("lr", a - t), ("rl", b - t))
                if w is not None:
                    terms_m.append((R.quantum_binomial(k - l + a - b, t), w))
            if lhs_m is not None and terms_m:
                out.append(check_equal(S, "square-switch-mirror", dict(N=N, k=k, l=l, a=a, b=b),
                                       lhs_m, lin(terms_m), cfg))

    # mixed-orientation rung relation
    for k, l in product(range(1, tot), repeat=2):
        if k + l > tot:
            continue
        lhs = _mixed_side(k, l, True)
        rhs_w = _mixed_side(k, l, False)
        src = (Strand(k, UP), Strand(l, DOWN))
        terms = [(R.quantum_int(N - k - l), identity(src))]
        if rhs_w is not None:
            terms.insert(0, (1, rhs_w))
        out.append(check_equal(S, "mixed-rungs", dict(N=N, k=k, l=l), lhs, lin(terms), cfg))

    # consequences: circles and the N-strand turnbacks
    for k in range(1, N + 1):
        c1 = Word((), [[CupLeft(k)], [CapRight(k)]])
        c2 = Word((), [[CupRight(k)], [CapLeft(k)]])
        val = lin([(_binom(R, N, k), identity(()))])
        out.append(check_equal(S, "circle-ccw", dict(N=N, k=k), c1, val, cfg))
        out.append(check_equal(S, "circle-cw", dict(N=N, k=k), c2, val, cfg))
    src = (Strand(N, UP), Strand(N, DOWN))
    out.append(check_equal(S, "N-turnback", dict(N=N), identity(src),
                           Word(src, [[CapRight(N)], [CupLeft(N)]]), cfg))
    src_r = (Strand(N, DOWN), Strand(N, UP))
    out.append(check_equal(S, "N-turnback-rev", dict(N=N), identity(src_r),
                           Word(src_r, [[CapLeft(N)], [CupRight(N)]]), cfg))
    for k in range(1, N):
        src = (Strand(k, UP), Strand(N, DOWN))
        w = Word(src, [[Id(k), Split(k, N - k, DOWN)], [CapRight(k), Id(N - k, DOWN)],
                       [CupLeft(k), Id(N - k, DOWN)], [Id(k), Merge(k, N - k, DOWN)]])
        out.append(check_equal(S, "N-fork", dict(N=N, k=k), identity(src), w, cfg))
    return out


# --------------------------------------------------------------- braiding

def X(k, l, sign="+", orients=(UP, UP)) -> Crossing:
    return Crossing(k, l, sign, orients)


def _strands(labels, orients):
    return tuple(Strand(k, o) for k, o in zip(labels, orients))


def curl(k: int, sign: str, side: str = "right") -> Word:
    """A kink on an upward k-strand; ``side`` is where the loop sits."""
    src = (Strand(k),)
    if side == "right":
        return Word(src, [[Id(k), CupLeft(k)], [Crossing(k, k, sign), Id(k, DOWN)], [Id(k), CapRight(k)]])
    return Word(src, [[CupRight(k), Id(k)], [Id(k, DOWN), Crossing(k, k, sign)], [CapLeft(k), Id(k)]])


def framing_exponent(N: int, k: int) -> int:
    """Exponent e with curl(-) = q^e on a k-strand: the twist of the k-th
    exterior power under this braiding.  Equals k(N-1) only for k = 1."""
    return k * (N + 1 - 2 * k)


def reid_checks(N: int, max_label: int = 2) -> list[CheckResult]:
    cfg = EvalConfig(N, Mode.Q_GENERIC)
    R = cfg.ring
    S = "reid"
    out: list[CheckResult] = []
    labels = range(1, min(max_label, N) + 1)
    ors = (UP, DOWN)
    for k in labels:
        src = (Strand(k),)
        for side in ("right", "left"):
            for name, f in (("RI", k * (N - 1)), ("RI-twist", framing_exponent(N, k))):
                note = "framing factor q^{k(N-1)} is right only for k = 1" if name == "RI" and k > 1 else ""
                for sg, sign, e in (("-neg", "-", -f), ("-pos", "+", f)):
                    r = check_equal(S, name + sg, dict(N=N, k=k, side=side),
                                    lin([(R.q_pow(e), curl(k, sign, side))]), identity(src), cfg)
                    out.append(known(r, note) if note else r)
    for k, l in product(labels, repeat=2):
        for o1, o2 in product(ors, repeat=2):
            src = _strands((k, l), (o1, o2))
            for s1, s2 in (("+", "-"), ("-", "+")):
                w = Word(src, [[X(k, l, s1, (o1, o2))], [X(l, k, s2, (o2, o1))]])
                out.append(check_equal(S, "RII", dict(N=N, k=k, l=l, o=o1 + o2, s=s1 + s2), w, identity(src), cfg))
    for (a, b, c) in product(labels, repeat=3):
        for os_ in product(ors, repeat=3):
            src = _strands((a, b, c), os_)
            for s in "+-":
                oa, ob, oc = os_
                Ia, Ic = Id(a, oa), Id(c, oc)
                lhs = Word(src, [[X(a, b, s, (oa, ob)), Ic],
                                 [Id(b, ob), X(a, c, s, (oa, oc))],
                                 [X(b, c, s, (ob, oc)), Ia]])
                rhs = Word(src, [[Ia, X(b, c, s, (ob, oc))],
                                 [X(a, c, s, (oa, oc)), Id(b, ob)],
                                 [Ic, X(a, b, s, (oa, ob))]])
                out.append(check_equal(S, "RIII", dict(N=N, labels=f"{a}{b}{c}", o="".join(os_), s=s), lhs, rhs, cfg))
    # forkslide: a strand crossing a split / merge
    for m, k, l in product(labels, repeat=3):
        if k + l > N:
            continue
        for s in "+-":
            src = (Strand(m), Strand(k + l))
            lhs = Word(src, [[Id(m), Split(k, l)], [X(m, k, s), Id(l)], [Id(k), X(m, l, s)]])
            rhs = Word(src, [[X(m, k + l, s)], [Split(k, l), Id(m)]])
            out.append(check_equal(S, "forkslide-split-L", dict(N=N, m=m, k=k, l=l, s=s), lhs, rhs, cfg))
            src = (Strand(k + l), Strand(m))
            lhs = Word(src, [[Split(k, l), Id(m)], [Id(k), X(l, m, s)], [X(k, m, s), Id(l)]])
            rhs = Word(src, [[X(k + l, m, s)], [Id(m), Split(k, l)]])
            out.append(check_equal(S, "forkslide-split-R", dict(N=N, m=m, k=k, l=l, s=s), lhs, rhs, cfg))
            src = (Strand(m), Strand(k), Strand(l))
            lhs = Word(src, [[X(m, k, s), Id(l)], [Id(k), X(m, l, s)], [Merge(k, l), Id(m)]])
            rhs = Word(src, [[Id(m), Merge(k, l)], [X(m, k + l, s)]])
            out.append(check_equal(S, "forkslide-merge-L", dict(N=N, m=m, k=k, l=l, s=s), lhs, rhs, cfg))
            src = (Strand(k), Strand(l), Strand(m))
            lhs = Word(src, [[Id(k), X(l, m, s)], [X(k, m, s), Id(l)], [Id(m), Merge(k, l)]])
            rhs = Word(src, [[Merge(k, l), Id(m)], [X(k + l, m, s)]])
            out.append(check_equal(S, "forkslide-merge-R", dict(N=N, m=m, k=k, l=l, s=s), lhs, rhs, cfg))
    return out

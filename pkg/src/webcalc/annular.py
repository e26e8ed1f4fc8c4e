"""Annular identities at q = 1: cap slides, wraps against rotations,
essential circles and the order of the global rotation."""
from __future__ import annotations

from fractions import Fraction

from .checks import CheckResult, check_equal, check_true
from .evaluator import EvalConfig, SparseOperator
from .scalars import Mode, elementary_symmetric
from .webcore import (
    DOWN, UP, BoundaryObject, CapLeft, CapRight, Crossing, CupLeft, CupRight, Id, Rotate, Strand,
    Word, Wrap, winding_grade,
)


def _ids(obj):
    return [Id(s.label, s.orient) for s in obj]


def essential_circle(k: int, turns: int = 1) -> Word:
    """k-labelled circle around the core: cup, wrap one leg, cap."""
    return Word((), [[CupLeft(k)], [Wrap(k, UP, turns), Id(k, DOWN)], [CapRight(k)]])


def rotation(obj: BoundaryObject, p: int = 1) -> Word:
    return Word(tuple(obj), [[Rotate(p, tuple(obj))]])


def last_to_front(obj: BoundaryObject) -> Word:
    """Crossings carrying the last strand to the first slot (q = 1 flips)."""
    obj = tuple(obj)
    slices, cur = [], list(obj)
    for pos in range(len(obj) - 2, -1, -1):
        a, b = cur[pos], cur[pos + 1]
        slices.append(_ids(cur[:pos]) + [Crossing(a.label, b.label, "+", (a.orient, b.orient))]
                      + _ids(cur[pos + 2:]))
        cur[pos], cur[pos + 1] = b, a
    return Word(obj, slices)


def wrap_on(obj: BoundaryObject, i: int, p: int) -> Word:
    """Wrap the i-th strand (1-based) p times."""
    obj = tuple(obj)
    if p == 0:
        return Word(obj)
    s = obj[i - 1]
    return Word(obj, [_ids(obj[:i - 1]) + [Wrap(s.label, s.orient, p)] + _ids(obj[i:])])


def _slide_objects(k: int):
    mids = [(), (Strand(1, UP),), (Strand(1, UP), Strand(2, DOWN)), (Strand(2, UP),)]
    return [m for m in mids if all(s.label <= 2 for s in m)]


def cap_slide_checks(N: int, mode: Mode = Mode.ZETA, labels=(1, 2)) -> list[CheckResult]:
    cfg = EvalConfig(N, mode)
    out = []
    for k in labels:
        if k > N:
            continue
        ku, kd = Strand(k, UP), Strand(k, DOWN)
        for mid in _slide_objects(k):
            m = _ids(mid)
            p = {"N": N, "k": k, "mid": len(mid), "mode": mode.value}
            # a cap on the outer pair, pulled through the seam either way
            for name, cap, first, last in (("capL", CapLeft(k), ku, kd), ("capR", CapRight(k), kd, ku)):
                obj = (first,) + mid + (last,)
                lhs = Word(obj, [[Rotate(1, obj)], m + [cap]])
                rhs = Word(obj, [[Rotate(-1, obj)], [cap] + m])
                out.append(check_equal("annular", f"slide-{name}", p, lhs, rhs, cfg))
            for name, cup, first, last in (("cupL", CupLeft(k), ku, kd), ("cupR", CupRight(k), kd, ku)):
                top = (last,) + mid + (first,)
                lhs = Word(mid, [m + [cup], [Rotate(-1, mid + (first, last))]])
                rhs = Word(mid, [[cup] + m, [Rotate(1, (first, last) + mid)]])
                out.append(check_equal("annular", f"slide-{name}", p, lhs, rhs, cfg))
                assert lhs.target == top
    return out


def wrap_rotate_checks(N: int, mode: Mode = Mode.ZETA, max_strands: int = 3) -> list[CheckResult]:
    """On 1-labelled objects of mixed orientation: wrapping the first strand
    equals rotating it to the end and crossing it back to the front."""
    cfg = EvalConfig(N, mode)
    out = []
    for n in range(1, max_strands + 1):
        for bits in range(2 ** n):
            obj = tuple(Strand(1, DOWN if bits >> j & 1 else UP) for j in range(n))
            lhs = wrap_on(obj, 1, 1)
            rhs = rotation(obj, 1).then(last_to_front(rotation(obj, 1).target))
            name = "wrap-rotate-" + "".join(s.orient for s in obj)
            out.append(check_equal("annular", name, {"N": N, "mode": mode.value}, lhs, rhs, cfg))
    return out


def essential_value(N: int, k: int, mode: Mode):
    """Expected scalar of the k-labelled essential circle."""
    R = EvalConfig(N, mode).ring
    return elementary_symmetric([R.gamma(i, 1) for i in range(1, N + 1)], k)


def essential_checks(N: int) -> list[CheckResult]:
    out = []
    for mode in (Mode.ZETA, Mode.FORMAL_X):
        cfg = EvalConfig(N, mode)
        for k in range(1, N + 1):
            expect = Fraction(0) if (mode is Mode.ZETA and k < N) else (
                Fraction((-1) ** (N - 1)) if mode is Mode.ZETA else essential_value(N, k, mode))
            rhs = SparseOperator.from_entries((), (), N, [((), (), expect)])
            out.append(check_equal("ess", "circle", {"N": N, "k": k, "mode": mode.value},
                                   essential_circle(k), rhs, cfg))
    cfg = EvalConfig(N, Mode.ZETA)
    one = (Strand(1, UP),)
    out.append(check_equal("ess", "D-order", {"N": N}, rotation(one, N), Word(one), cfg))

    def grade():
        g = [winding_grade(essential_circle(k)) for k in range(1, N + 1)]
        return g == list(range(1, N + 1)), f"grades {g}"
    out.append(check_true("ess", "circle-grade", {"N": N}, grade))
    return out


def annular_checks(N: int) -> list[CheckResult]:
    out = cap_slide_checks(N)
    out += wrap_rotate_checks(N)
    if N <= 3:
        out += cap_slide_checks(N, Mode.FORMAL_X, labels=(1,))
        out += wrap_rotate_checks(N, Mode.FORMAL_X, max_strands=2)
    return out

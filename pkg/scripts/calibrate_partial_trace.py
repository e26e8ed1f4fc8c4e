"""Enumerate the splitter/merge conventions for the rank-two partial trace
and show which reproduce pTr_1(T_2) = lambda(T_1) and pTr_2(T_2) = 2 lambda^2(empty)."""
from webcalc import gl2
from webcalc.evaluator import evaluate


def main():
    want = [evaluate(gl2.lam_T(1, 1), gl2.ZETA), evaluate(gl2.lam_T(2, 0), gl2.ZETA)]
    for c in gl2.CONVENTIONS:
        got = [evaluate(gl2.partial_trace(gl2.T(2), 2, n, c), gl2.ZETA) for n in (1, 2)]
        marks = ["ok" if g == w else ("zero" if g.is_zero() else ("sign" if g == w.scale(-1) else "other"))
                 for g, w in zip(got, want)]
        print(f"{c.label():28s} pTr1: {marks[0]:5s} pTr2: {marks[1]}")
    cal = gl2.calibrate_pTr()
    print(f"\n{len(cal['hits'])} conventions pass, {cal['distinct']} distinct operator value(s); "
          f"chosen {cal['chosen'].label()}")


if __name__ == "__main__":
    main()

"""Measure the scalar of a kink on a k-strand at generic q and compare it
with q^{k(N-1)}."""
import argparse

from webcalc.evaluator import EvalConfig, evaluate
from webcalc.relations import curl
from webcalc.scalars import Mode, render


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--N", type=int, nargs="+", default=[2, 3, 4])
    args = ap.parse_args()
    print(f"{'N':>2} {'k':>2}  {'kink(-)':10s} {'q^k(N-1)':10s} {'q^k(N+1-2k)':12s}")
    for N in args.N:
        cfg = EvalConfig(N, Mode.Q_GENERIC)
        for k in range(1, N):
            op = evaluate(curl(k, "-"), cfg)
            vals = {op.entry(t, s) for s, col in op.cols.items() for t in col if t == s}
            off = any(t != s for s, col in op.cols.items() for t in col)
            val = render(vals.pop()) if len(vals) == 1 and not off else "not scalar"
            print(f"{N:>2} {k:>2}  {val:10s} {'q^' + str(k * (N - 1)):10s} {'q^' + str(k * (N + 1 - 2 * k)):12s}")


if __name__ == "__main__":
    main()

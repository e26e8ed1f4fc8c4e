"""Characters of the main idempotents, with their expansions in e_1..e_N."""
import argparse

from webcalc.evaluator import EvalConfig, evaluate
from webcalc.projectors import lookup
from webcalc.scalars import Mode
from webcalc.symfun import character, e_expansion_text


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--N", type=int, default=3)
    ap.add_argument("--keys", nargs="+", default=["T:1", "T:2", "T:3", "Vclasp:2", "Pclasp:2", "O:2", "part:2+1"])
    args = ap.parse_args()
    cfg = EvalConfig(args.N, Mode.ZETA)
    for key in args.keys:
        f = character(evaluate(lookup(key, args.N).expr, cfg)).sympoly()
        print(f"{key:10s} {str(f):50s} = {e_expansion_text(f)}")


if __name__ == "__main__":
    main()

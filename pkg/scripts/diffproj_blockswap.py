"""Compare (T_m x T_n)(T_{m-r} x S_r M_r x T_{n-r})(T_m x T_n) with e_{m,n} for
every r, and show the block swap correction when r = m = n."""
from webcalc import gl2
from webcalc.evaluator import evaluate, rank


def main():
    op = lambda e: evaluate(e, gl2.ZETA)  # noqa: E731
    for m, n in [(1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (2, 3), (3, 2), (3, 3)]:
        e, TT, Tsum = op(gl2.e_mn(m, n)), op(gl2.TT(m, n)), op(gl2.T(m + n))
        for r in range(1, min(m, n) + 1):
            lhs = op(gl2.diffproj(m, n, r))
            line = f"m={m} n={n} r={r}: equal={lhs == e}"
            if m == n == r:
                sw = op(gl2.block_swap(m))
                sg = (-1) ** m
                rhs = TT + (TT @ sw @ TT).scale(sg) + Tsum.scale(-1 - sg)
                line += f", equals TT + (-1)^m TT*swap*TT - (1+(-1)^m) T_(m+n): {lhs == rhs}"
                line += f", rank(lhs)={rank(lhs)} rank(e)={rank(e)}"
            print(line)


if __name__ == "__main__":
    main()

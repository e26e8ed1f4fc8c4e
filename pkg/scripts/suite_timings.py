"""Wall-clock time and check counts for every suite unit."""
import argparse
import time

from webcalc import suites


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--N", type=int, nargs="+", default=None)
    args = ap.parse_args()
    for unit in suites.expand("all", args.N):
        t0 = time.perf_counter()
        res = suites.run_unit(unit)
        dt = time.perf_counter() - t0
        stat = {s: sum(r.status == s for r in res) for s in ("PASS", "FAIL", "XFAIL")}
        name, N, k = unit
        print(f"{name:9s} N={N}" + (f" k={k}" if k else "    ") + f"  {dt:6.2f}s  {stat}")


if __name__ == "__main__":
    main()

"""One verdict line per acceptance criterion (printed in the terminal summary)."""
import subprocess
import sys
import time

import pytest

from conftest import FIXTURES, VERDICTS
from webcalc import suites

LIMITS = {1: 120, 2: 120, 3: 300, 4: 60, 5: 120, 6: 300, 7: 120, 8: 300, 9: 60, 10: 600}


def run(name, Ns, ks=None):
    t0 = time.perf_counter()
    res = [r for u in suites.expand(name, Ns, ks) for r in suites.run_unit(u)]
    return res, time.perf_counter() - t0


def record(k, results, seconds, note=""):
    clean = [r for r in results if not r.known]
    flagged = [r for r in results if r.known]
    ok = all(r.passed for r in clean) and all(r.passed for r in flagged) and seconds < LIMITS[k]
    n_fl = len(flagged)
    extra = f"; {n_fl} documented discrepanc{'y fails' if n_fl == 1 else 'ies fail'}" if any(not r.passed for r in flagged) else ""
    VERDICTS[k] = (f"{'PASS' if ok else 'FAIL'} criterion {k}: {len(clean)} checks, "
                   f"{sum(not r.passed for r in clean)} failing{extra}, {seconds:.1f}s{note}")
    return clean, flagged


def assert_clean(k, clean, seconds):
    bad = [r.line() for r in clean if not r.passed]
    assert not bad, "\n".join(bad[:10])
    assert seconds < LIMITS[k]


def test_criterion_1_planar_relations():
    res, dt = run("webrel", [2, 3, 4])
    clean, _ = record(1, res, dt)
    assert_clean(1, clean, dt)


@pytest.fixture(scope="module")
def reid():
    return run("reid", [2, 3])


def test_criterion_2_reidemeister(reid):
    res, dt = reid
    clean, _ = record(2, res, dt, " (literal RI factor on 2-strands)")
    assert_clean(2, clean, dt)


@pytest.mark.xfail(strict=True, reason="the kink on a k-strand is q^{k(N+1-2k)}, not q^{k(N-1)}, for k >= 2")
def test_criterion_2_literal_framing_factor(reid):
    res, _ = reid
    assert all(r.passed for r in res if r.known)


def test_criterion_3_extremal_projectors():
    res, dt = run("tm", [2, 3, 4])
    clean, _ = record(3, res, dt)
    assert_clean(3, clean, dt)


def test_criterion_4_essential_circles():
    res, dt = run("ess", [2, 3, 4, 5, 6])
    clean, _ = record(4, res, dt)
    assert_clean(4, clean, dt)


def test_criterion_5_two_strand_algebra():
    res, dt = run("end2", [2, 3, 4, 5])
    clean, _ = record(5, res, dt)
    assert_clean(5, clean, dt)


def test_criterion_6_newton():
    res, dt = run("newton", [2, 3], [2, 3, 4])
    clean, _ = record(6, res, dt)
    assert_clean(6, clean, dt)


def test_criterion_7_characters():
    res, dt = run("chars", [2, 3, 4])
    clean, _ = record(7, res, dt)
    assert_clean(7, clean, dt)


@pytest.fixture(scope="module")
def gl2():
    t0 = time.perf_counter()
    res = []
    for name in ("gl2rel", "gl2ptr", "gl2emn", "gl2skel"):
        res += run(name, [2])[0]
    return res, time.perf_counter() - t0


def test_criterion_8_gl2(gl2):
    res, dt = gl2
    clean, _ = record(8, res, dt, " (diffproj with r = m = n)")
    assert_clean(8, clean, dt)


@pytest.mark.xfail(strict=True, reason="for r = m = n the block swap is not absorbed by T_m (x) T_n")
def test_criterion_8_literal_diffproj(gl2):
    res, _ = gl2
    assert all(r.passed for r in res if r.known)


def test_criterion_9_spanning_rank():
    res, dt = run("spanning", [2, 3])
    clean, _ = record(9, res, dt)
    assert_clean(9, clean, dt)


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "webcalc.cli", *args], capture_output=True, text=True)


def test_criterion_10_cli():
    from webcalc.webcore import parse_web, print_web
    t0 = time.perf_counter()
    codes = {f"all N={N}": _cli("suite", "all", "--N", str(N)).returncode for N in (2, 3)}
    codes["sT2=T2"] = _cli("check", str(FIXTURES / "st2_n3.web"), str(FIXTURES / "t2_n3.web")).returncode
    codes["T3 recursions"] = _cli("check", str(FIXTURES / "t3_recursive.web"),
                                  str(FIXTURES / "t3_alt.web")).returncode
    round_trip = []
    for f in sorted(FIXTURES.glob("*.web")):
        a = parse_web(f.read_text())
        b = parse_web(print_web(a.expr, a.N, a.mode, a.annular))
        round_trip.append(b.expr.canonical() == a.expr.canonical() and (a.N, a.mode) == (b.N, b.mode))
    dt = time.perf_counter() - t0
    ok = all(c == 0 for c in codes.values()) and all(round_trip) and dt < LIMITS[10]
    VERDICTS[10] = (f"{'PASS' if ok else 'FAIL'} criterion 10: exit codes {codes}, "
                    f"{sum(round_trip)}/{len(round_trip)} fixtures round-trip, {dt:.1f}s")
    assert ok, codes

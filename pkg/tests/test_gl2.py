import pytest

from helpers import failures
from webcalc import gl2
from webcalc.evaluator import evaluate, rank


def test_calibration_is_planar():
    cal = gl2.calibrate_pTr()
    assert cal["distinct"] == 1
    assert gl2.PLANAR in cal["hits"]
    assert len(cal["hits"]) == 2


def test_partial_trace_examples():
    c = gl2.convention()
    Z = gl2.ZETA
    assert evaluate(gl2.partial_trace(gl2.T(2), 2, 1, c), Z) == evaluate(gl2.lam_T(1, 1), Z)
    assert evaluate(gl2.partial_trace(gl2.T(2), 2, 2, c), Z) == evaluate(gl2.lam_T(2, 0), Z)
    assert evaluate(gl2.partial_trace(gl2.T(3), 3, 1, c), Z) == evaluate(gl2.lam_T(1, 2), Z)


def test_e11_halves():
    e = evaluate(gl2.e_mn(1, 1), gl2.ZETA)
    assert e @ e == e and rank(e) == 2


def test_parprod2_cross_term_vanishes():
    phi1, psi1, phi2, psi2 = (evaluate(x, gl2.ZETA) for x in gl2.parprod2_maps(2))
    assert (psi1 @ phi2).is_zero()


def test_webdecomp_branching():
    dec = gl2.webdecomp_ranks(4)
    assert dec[2] == [(0, 2), (1, 0), (1, 0)]


@pytest.mark.parametrize("name", ["gl2rel", "gl2ptr", "gl2emn", "gl2skel"])
def test_gl2_suites(name):
    assert failures(name, 2) == []


def test_gl2_suites_skip_other_ranks():
    from webcalc import suites
    assert suites.expand("gl2emn", [3]) == []

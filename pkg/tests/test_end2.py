from fractions import Fraction

import pytest

from helpers import failures
from webcalc import end2
from webcalc.end2 import End2
from webcalc.evaluator import EvalConfig, evaluate
from webcalc.scalars import Mode


def test_D2_eigenvalue_n2():
    op = evaluate(end2.D2(), EvalConfig(2, Mode.ZETA))
    assert op.entry(((1, 2),), ((1, 2),)) == -1


def test_u_on_basis():
    u = evaluate(end2.u(), EvalConfig(3, Mode.ZETA))
    v12 = ((1,), (2,))
    assert dict(u.cols[v12]) == {((1,), (2,)): 1, ((2,), (1,)): -1}


@pytest.mark.parametrize("N", [2, 3, 4])
def test_calibration_constraint(N):
    alg = End2(N)
    assert alg.calibration["distinct"] == 1
    lhs = alg.op(end2.alternating(2))
    rhs = alg.op(end2.D(-1)) @ alg.op(end2.S_word()) @ alg.B1 @ alg.op(end2.M_word())
    assert lhs == rhs


@pytest.mark.parametrize("N", [3, 4, 5])
def test_top_and_vanishing(N):
    alg = End2(N)
    assert alg.A(N + 1).is_zero()
    assert alg.A(N) == alg.D2(-1).scale(Fraction((-1) ** (N - 1)))
    for k in range(1, N):
        assert alg.E(k).is_zero()


def test_A4():
    alg = End2(4)
    assert alg.A(4) == alg.B1 @ alg.B1 - alg.D2()


def test_small_XY():
    alg = End2(3)
    uu, vv = alg.op(end2.u()), alg.op(end2.v())
    assert alg.X(3) == uu @ vv @ uu - uu
    a2 = End2(2)
    assert a2.X(2) == a2.op(end2.v()) @ a2.op(end2.u()) == a2.Y(2)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_end2_suite(N):
    assert failures("end2", N) == []

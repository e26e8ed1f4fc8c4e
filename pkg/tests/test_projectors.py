from fractions import Fraction
from math import comb

import pytest

from helpers import failures
from webcalc import oracles
from webcalc.evaluator import EvalConfig, evaluate, rank
from webcalc.projectors import (
    clasp_anti, clasp_sym, eigenprojector_P, extremal_T, extremal_T_alt, id_m, lambda_shift, lookup,
    orbit_O, partition_idempotent, s, unit_zigzag,
)
from webcalc.scalars import Mode
from webcalc.webcore import compose, identity, lin


def cfg(N):
    return EvalConfig(N, Mode.ZETA)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_eigenprojectors(N):
    Ps = [evaluate(eigenprojector_P(N, k), cfg(N)) for k in range(1, N + 1)]
    for k, P in enumerate(Ps, 1):
        assert P == oracles.line_projector(N, k) == oracles.fourier_projector(N, k)
        for l, Q in enumerate(Ps, 1):
            assert P @ Q == (P if k == l else P.scale(0))
    total = Ps[0]
    for P in Ps[1:]:
        total = total + P
    assert total == evaluate(id_m(1), cfg(N))


@pytest.mark.parametrize("N,m", [(2, 1), (2, 4), (3, 3), (4, 2)])
def test_extremal_against_oracle(N, m):
    op = evaluate(extremal_T(N, m), cfg(N))
    assert op == oracles.extremal(m, N)
    assert rank(op) == N


@pytest.mark.parametrize("N,m", [(2, 3), (3, 3), (2, 4)])
def test_two_recursions(N, m):
    assert evaluate(extremal_T(N, m), cfg(N)) == evaluate(extremal_T_alt(N, m), cfg(N))


def test_clasps():
    for N in (2, 3):
        assert evaluate(clasp_sym(2), cfg(N)) == evaluate(
            lin([(Fraction(1, 2), id_m(2)), (Fraction(1, 2), s(2, 1))]), cfg(N))
        for m in range(1, N + 1):
            assert rank(evaluate(clasp_anti(m), cfg(N))) == comb(N, m)
        assert evaluate(clasp_anti(N + 1), cfg(N)).is_zero()


def test_orbit_and_partition_ranks():
    assert rank(evaluate(orbit_O(2, 2), cfg(2))) == 2
    assert rank(evaluate(orbit_O(3, 3), cfg(3))) == 6
    O = evaluate(orbit_O(3, 2), cfg(3))
    assert O @ O == O
    assert rank(evaluate(partition_idempotent(2, (1, 1)), cfg(2))) == 2
    assert rank(evaluate(partition_idempotent(2, (2, 1)), cfg(2))) == 2
    assert evaluate(partition_idempotent(3, (3,)), cfg(3)) == evaluate(extremal_T(3, 3), cfg(3))
    for parts in ((2, 1), (1, 1), (2, 2), (1, 1, 1)):
        assert evaluate(partition_idempotent(3, parts), cfg(3)) == oracles.block_orbit(parts, 3)


def test_lambda_zigzag():
    N = 2
    e = extremal_T(N, 2)
    assert lambda_shift(e, N).target[-1].label == N
    into, out = unit_zigzag(e.source, N)
    assert evaluate(compose(out, into), cfg(N)) == evaluate(identity(e.source), cfg(N))


def test_lookup():
    h = lookup("T:3", 2)
    assert h.certify(2)
    assert lookup("part:2+1", 3).certify(3)
    with pytest.raises(KeyError):
        lookup("nope:1", 2)


@pytest.mark.parametrize("N", [2, 3])
def test_tm_suite(N):
    assert failures("tm", N) == []


@pytest.mark.parametrize("N", [2, 3])
def test_clasp_and_spanning_suites(N):
    assert failures("clasps", N) == []
    assert failures("spanning", N) == []


def test_annular_suites():
    for N in (2, 3):
        assert failures("ess", N) == []
        assert failures("annular", N) == []

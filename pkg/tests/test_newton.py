import pytest

from helpers import failures
from webcalc.evaluator import EvalConfig, evaluate, rank
from webcalc.newton import NewtonZigZag, Summand, kN_remark_checks
from webcalc.projectors import clasp_anti, wrap_at
from webcalc.scalars import Mode
from webcalc.webcore import compose_all


def test_summand_ranks_n2_k2():
    z = NewtonZigZag(2, 2)
    assert rank(z.e(Summand(2, 2))) == 2
    odd = sum(rank(z.e(a)) for a in z.odd)
    even = sum(rank(z.e(b)) for b in z.even)
    assert odd == even


@pytest.mark.parametrize("N,k", [(2, 2), (2, 3), (3, 3), (3, 4)])
def test_newton_suite(N, k):
    assert failures("newton", N, k) == []


def test_remark_delta_n3():
    cfg = EvalConfig(3, Mode.ZETA)
    V = clasp_anti(3)
    mid = lambda d: evaluate(compose_all(V, wrap_at(3, 3, d), V), cfg)  # noqa: E731
    assert mid(1 - 2).is_zero()
    assert mid(0) == evaluate(V, cfg)


def test_remark_n2_rank_one():
    assert all(r.passed for r in kN_remark_checks(2))


def test_zigzag_needs_k2():
    with pytest.raises(ValueError):
        NewtonZigZag(2, 1)

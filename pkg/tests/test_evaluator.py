import pytest

from webcalc.annular import essential_circle
from webcalc.evaluator import EvalConfig, SparseOperator, evaluate, linear_span_dim, parse_dump, rank
from webcalc.oracles import permutation_operator
from webcalc.projectors import T2, id_m, rot, wrap_at
from webcalc.scalars import LaurentX, Mode, ScalarRing, elementary_symmetric, zeta_power
from webcalc.webcore import CapLeft, CapRight, CupLeft, Crossing, Merge, Strand, Word, Wrap, UP, DOWN, ups

Z2, Z3 = EvalConfig(2, Mode.ZETA), EvalConfig(3, Mode.ZETA)
Q2 = EvalConfig(2, Mode.Q_GENERIC)


def test_cap_left_pairs_dual_with_vector():
    op = evaluate(Word((Strand(1, DOWN), Strand(1, UP)), [[CapLeft(1)]]), Z3)
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            assert op.entry((), ((a,), (b,))) == (1 if a == b else 0)


def test_merge_sign():
    op = evaluate(Word(ups(1, 1), [[Merge(1, 1)]]), Z2)
    assert op.entry(((1, 2),), ((2,), (1,))) == -1
    assert op.entry(((1, 2),), ((1,), (2,))) == 1


def test_wrap_on_two_strand():
    op = evaluate(Word(ups(2), [[Wrap(2, UP, 1)]]), Z2)
    assert op.entry(((1, 2),), ((1, 2),)) == zeta_power(2, 1) * zeta_power(2, 2) == -1


def test_crossing_is_transposition_at_q1():
    op = evaluate(Word(ups(1, 1), [[Crossing(1, 1, "+")]]), Z3)
    assert op == permutation_operator(2, 3, [1, 0])


@pytest.mark.parametrize("N", [2, 3, 4])
def test_planar_circles(N):
    cfg = EvalConfig(N, Mode.Q_GENERIC)
    for k in range(1, N + 1):
        c = evaluate(Word((), [[CupLeft(k)], [CapRight(k)]]), cfg)
        assert c.entry((), ()) == cfg.ring.quantum_binomial(N, k)


def test_one_circle_rank_two():
    assert evaluate(Word((), [[CupLeft(1)], [CapRight(1)]]), Q2).entry((), ()) == Q2.ring.parse("q + q^-1")


@pytest.mark.parametrize("N", [2, 3, 4])
def test_essential_circles(N):
    fx = EvalConfig(N, Mode.FORMAL_X)
    X = [LaurentX.var(N, i) for i in range(1, N + 1)]
    for k in range(1, N + 1):
        assert evaluate(essential_circle(k), fx).entry((), ()) == elementary_symmetric(X, k)
        z = evaluate(essential_circle(k), EvalConfig(N, Mode.ZETA)).entry((), ())
        assert z == (0 if k < N else (-1) ** (N - 1))


def test_rank_examples():
    assert rank(evaluate(id_m(2), Z2)) == 4
    assert rank(evaluate(T2(2), Z2)) == 2
    assert rank(SparseOperator.zero(ups(1), ups(1), 2)) == 0


def test_t2_idempotent():
    t = evaluate(T2(3), Z3)
    assert t @ t == t


@pytest.mark.parametrize("N", [2, 3, 4])
def test_wrap_powers_span(N):
    cfg = EvalConfig(N, Mode.ZETA)
    assert linear_span_dim([evaluate(wrap_at(1, 1, j), cfg) for j in range(N + 1)]) == N
    fx = EvalConfig(N, Mode.FORMAL_X)
    assert linear_span_dim([evaluate(wrap_at(1, 1, j), fx) for j in range(-3, 4)]) == 7


def test_dump_round_trip():
    for cfg, e in ((Z3, T2(3)), (Q2, Word(ups(1, 1), [[Crossing(1, 1, "+")]])), (Z2, rot(2, 1))):
        op = evaluate(e, cfg)
        back = parse_dump(op.dump(), op.src, op.tgt, ScalarRing(cfg.mode, cfg.N))
        assert back == op


def test_rotation_full_turn():
    for N in (2, 3):
        cfg = EvalConfig(N, Mode.ZETA)
        assert evaluate(rot(1, N), cfg) == evaluate(id_m(1), cfg)

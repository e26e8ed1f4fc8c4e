import pytest
from hypothesis import given, settings, strategies as st

from helpers import failures
from webcalc.evaluator import EvalConfig, evaluate
from webcalc.projectors import extremal_T
from webcalc.scalars import Mode
from webcalc.symfun import (
    SymPoly, character, e_expansion, e_expansion_text, newton_identity_check, sym_basis,
)


def test_basis_examples():
    assert str(sym_basis("e", 2, 2)) == "X1*X2"
    assert str(sym_basis("p", 2, 2)) == "X1^2 + X2^2"
    assert sym_basis("h", 2, 2) == sym_basis("p", 2, 2) + sym_basis("e", 2, 2)


def test_newton_examples():
    e, p = (lambda j: sym_basis("e", j, 2)), (lambda j: sym_basis("p", j, 2))
    assert p(2) == e(2) * (-2) + e(1) * p(1)
    for N in (1, 2, 3):
        assert sym_basis("p", 1, N) == sym_basis("e", 1, N)


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_newton_identity(N):
    assert all(newton_identity_check(k, N) for k in range(1, 7))


def test_e_expansion_text():
    assert e_expansion_text(sym_basis("p", 3, 3)) == "e1^3 - 3*e1*e2 + 3*e3"


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.lists(st.tuples(st.sampled_from("ehp"), st.integers(1, 3)), min_size=1, max_size=3))
def test_e_expansion_rebuilds(N, factors):
    f = SymPoly.of({(0,) * N: 1}, N)
    for kind, j in factors:
        f = f * sym_basis(kind, j, N)
    es = [sym_basis("e", j, N) for j in range(1, N + 1)]
    rebuilt = SymPoly.of({}, N)
    for a, c in e_expansion(f).items():
        term = SymPoly.of({(0,) * N: c}, N)
        for i, x in enumerate(a):
            for _ in range(x):
                term = term * es[i]
        rebuilt = rebuilt + term
    assert rebuilt == f


def test_character_rejects_non_idempotent():
    op = evaluate(extremal_T(2, 2), EvalConfig(2, Mode.ZETA)).scale(2)
    with pytest.raises(ValueError):
        character(op)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_chars_suite(N):
    assert failures("chars", N) == []

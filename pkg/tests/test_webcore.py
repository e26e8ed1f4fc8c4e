import pytest
from hypothesis import given, settings, strategies as st

from webcalc.annular import essential_circle
from webcalc.evaluator import EvalConfig, evaluate
from webcalc.projectors import T2, dumbbell, id_m, place, rot, strands
from webcalc.scalars import Mode
from webcalc.webcore import (
    BoundaryError, CapRight, Crossing, CupLeft, Strand, UP, WebError,
    WebSyntaxError, Word, Wrap, compose, identity, lin, parse_web, parse_word, print_web, tensor,
    winding_grade,
)

ZETA3 = EvalConfig(3, Mode.ZETA)


@st.composite
def small_word(draw, m):
    """A random word on m upward 1-strands built from crossings, dumbbells and wraps."""
    w = id_m(m)
    for _ in range(draw(st.integers(0, 3))):
        kind = draw(st.sampled_from(["x", "u", "wrap"] if m > 1 else ["wrap"]))
        if kind == "wrap":
            i, p = draw(st.integers(1, m)), draw(st.integers(-2, 2))
            g = place(strands(m), i, Wrap(1, UP, p)) if p else id_m(m)
        elif kind == "x":
            g = place(strands(m), draw(st.integers(1, m - 1)), Crossing(1, 1, draw(st.sampled_from("+-"))))
        else:
            g = dumbbell(m, draw(st.integers(1, m - 1)))
        w = compose(g, w)
    return w


def test_compose_identity():
    w = dumbbell(2, 1)
    assert evaluate(compose(id_m(2), w), ZETA3) == evaluate(w, ZETA3)


def test_closed_circle():
    circle = Word((), [[CupLeft(1)], [CapRight(1)]])
    assert circle.source == () and circle.target == ()
    assert evaluate(circle, ZETA3) == evaluate(lin([(3, identity(()))]), ZETA3)


def test_boundary_mismatch():
    with pytest.raises(BoundaryError):
        compose(id_m(2), id_m(3))


def test_tensor_rejects_rotate():
    with pytest.raises(WebError):
        tensor(rot(2, 1), id_m(1))


def test_t2_term_count():
    N = 3
    sq = compose(T2(N), T2(N))
    assert len(sq.expand()) == N * N


def test_tensor_unit():
    w = dumbbell(2, 1)
    assert evaluate(tensor(w, identity(())), ZETA3) == evaluate(w, ZETA3)


@settings(max_examples=25, deadline=None)
@given(small_word(2), small_word(1), small_word(2), small_word(1))
def test_interchange(a, b, c, d):
    lhs = compose(tensor(a, b), tensor(c, d))
    rhs = tensor(compose(a, c), compose(b, d))
    assert evaluate(lhs, ZETA3) == evaluate(rhs, ZETA3)


@settings(max_examples=25, deadline=None)
@given(small_word(2), small_word(2), small_word(1))
def test_grade_additive(a, b, c):
    assert winding_grade(compose(a, b)) == winding_grade(a) + winding_grade(b)
    assert winding_grade(tensor(a, c)) == winding_grade(a) + winding_grade(c)


def test_grade_examples():
    assert winding_grade(id_m(2)) == 0
    assert winding_grade(place(strands(1), 1, Wrap(1, UP, 1))) == 1
    for N in (2, 3, 4):
        assert winding_grade(essential_circle(N)) == N


@settings(max_examples=25, deadline=None)
@given(small_word(3), small_word(3), st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_print_parse_round_trip(a, b, c):
    e = lin([(c, a), (1, b)]) if c else a
    canon = e.canonical()
    if not (canon.expand() if isinstance(canon, Word) else canon.terms):
        with pytest.raises(WebError):
            print_web(e, 3, Mode.ZETA)
        return
    doc = parse_web(print_web(e, 3, Mode.ZETA))
    assert doc.expr.canonical() == e.canonical()


def test_parse_examples():
    assert parse_word("id(1^)").source == (Strand(1),)
    u = parse_word("merge@1(1,1) ; split@1(1,1)", "1^,1^")
    assert evaluate(u, ZETA3) == evaluate(dumbbell(2, 1), ZETA3)
    doc = parse_web("N=2 mode=zeta\n(1/2)*[id(1^) id(1^)] + (1/2)*[wrap@1(-1) ; wrap@2(1)]")
    assert evaluate(doc.expr, EvalConfig(2, Mode.ZETA)) == evaluate(T2(2), EvalConfig(2, Mode.ZETA))


@pytest.mark.parametrize("text,exc", [
    ("N=2 source=1^,1^\n[merge@1(1,1) ; merge@1(1,1)]", BoundaryError),
    ("N=2\n[frob(1)]", WebSyntaxError),
    ("N=2\n[id(1^)", WebSyntaxError),
    ("N=2\n(1/2)[id(1^)]", WebSyntaxError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_web(text)


def test_syntax_error_position():
    with pytest.raises(WebSyntaxError) as info:
        parse_web("N=2\n[id(1^)] [id(1^)]")
    assert info.value.line == 2


def test_fixture_print_fixpoint(fixtures_dir):
    for f in sorted(fixtures_dir.glob("*.web")):
        doc = parse_web(f.read_text())
        once = print_web(doc.expr, doc.N, doc.mode, doc.annular)
        again = parse_web(once)
        assert print_web(again.expr, again.N, again.mode, again.annular) == once, f.name

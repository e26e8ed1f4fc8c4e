"""The zig-zag isomorphism between sums of V_{k-l} (x) T_l idempotents.

Odd side: l = 1, 3, 5, ...  Even side: l = 2, 4, ... together with k
copies of V_k.  Neighbouring summands are joined by products of their
idempotents with the scalar factors (k-l) or (k-l+1); the l = 1 summand
reaches the k copies of V_k through eigenprojector decorations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .checks import CheckResult, check_equal, check_true
from .evaluator import EvalConfig, SparseOperator, evaluate, rank
from .projectors import clasp_anti, eigenprojector_P, extremal_T, id_m, strands, wrap_at
from .scalars import Mode
from .webcore import WebExpr, compose, compose_all, lin, tensor, tensor_all


@dataclass(frozen=True)
class Summand:
    k: int
    l: int          # size of the T block; 0 means a copy of V_k
    copy: int = 0   # which of the k copies when l = 0

    def name(self) -> str:
        return f"V{self.k}#{self.copy}" if self.l == 0 else f"V{self.k - self.l}xT{self.l}"


def idempotent(N: int, k: int, l: int) -> WebExpr:
    """V_{k-l} (x) T_l on k strands."""
    if l == 0:
        return clasp_anti(k)
    if l == k:
        return extremal_T(N, k)
    return tensor(clasp_anti(k - l), extremal_T(N, l))


def _decorated(N: int, colors) -> WebExpr:
    """P_{c_1} (x) ... (x) P_{c_k}."""
    return tensor_all(*[eigenprojector_P(N, c) for c in colors])


def bottom_maps(N: int, k: int, j: int) -> tuple[WebExpr, WebExpr]:
    """f_j : V_{k-1} (x) 1 -> V_k and g_j back, for the j-th copy; the last
    strand carries the j-th largest color of each k-set."""
    A = tensor(clasp_anti(k - 1), id_m(1)) if k > 1 else id_m(1)
    V = clasp_anti(k)
    f_terms, g_terms = [], []
    for S in combinations(range(1, N + 1), k):
        x = sorted(S, reverse=True)[j - 1]
        rest = [c for c in S if c != x]
        P = _decorated(N, rest + [x])
        f_terms.append((Fraction(factorial(k - 1)), compose_all(V, P, A)))
        g_terms.append((Fraction(factorial(k)), compose_all(A, P, V)))
    if not f_terms:
        return None, None
    return lin(f_terms), lin(g_terms)


class NewtonZigZag:
    """All maps of the zig-zag for one (N, k), evaluated in ZETA mode."""

    def __init__(self, N: int, k: int):
        if k < 2:
            raise ValueError("the zig-zag needs k >= 2")
        self.N, self.k = N, k
        self.cfg = EvalConfig(N, Mode.ZETA)
        self.odd = [Summand(k, l) for l in range(1, k + 1, 2)]
        self.even = [Summand(k, l) for l in range(2, k + 1, 2)] + [Summand(k, 0, j) for j in range(1, k + 1)]
        self._e: dict = {}

    def e(self, sm: Summand) -> SparseOperator:
        key = sm.l
        if key not in self._e:
            self._e[key] = evaluate(idempotent(self.N, self.k, sm.l), self.cfg)
        return self._e[key]

    def zero(self) -> SparseOperator:
        obj = strands(self.k)
        return SparseOperator.zero(obj, obj, self.N)

    def forward(self, a: Summand, b: Summand) -> SparseOperator:
        """Component odd a -> even b."""
        k = self.k
        if b.l == 0:
            if a.l != 1:
                return self.zero()
            f, _ = bottom_maps(self.N, k, b.copy)
            return self.zero() if f is None else evaluate(f, self.cfg)
        if b.l == a.l + 1:
            return (self.e(b) @ self.e(a)).scale(Fraction(k - a.l))
        if b.l == a.l - 1:
            return self.e(b) @ self.e(a)
        return self.zero()

    def backward(self, b: Summand, a: Summand) -> SparseOperator:
        """Component even b -> odd a."""
        k = self.k
        if b.l == 0:
            if a.l != 1:
                return self.zero()
            _, g = bottom_maps(self.N, k, b.copy)
            return self.zero() if g is None else evaluate(g, self.cfg)
        if b.l == a.l + 1:
            return self.e(a) @ self.e(b)
        if b.l == a.l - 1:
            return (self.e(a) @ self.e(b)).scale(Fraction(k - a.l + 1))
        return self.zero()

    def composite(self, side: str, x: Summand, y: Summand) -> SparseOperator:
        """Component y <- x of G F (odd side) or F G (even side)."""
        total = self.zero()
        if side == "odd":
            for b in self.even:
                total = total + self.backward(b, y) @ self.forward(x, b)
        else:
            for a in self.odd:
                total = total + self.forward(a, y) @ self.backward(x, a)
        return total

    def expected(self, x: Summand, y: Summand) -> SparseOperator:
        if x != y:
            return self.zero()
        return self.e(x)


def newton_checks(N: int, k: int) -> list[CheckResult]:
    z = NewtonZigZag(N, k)
    cfg = z.cfg
    out = []
    P = lambda **kw: {"N": N, "k": k, **kw}  # noqa: E731
    for sm in z.odd + z.even:
        e = z.e(sm)
        out.append(check_equal("newton", "idempotent", P(summand=sm.name()), e @ e, e, cfg))
    # intertwiners: e_target f e_source = f
    for a in z.odd:
        for b in z.even:
            f, g = z.forward(a, b), z.backward(b, a)
            out.append(check_equal("newton", "intertwines", P(map=f"{a.name()}->{b.name()}"),
                                   z.e(b) @ f @ z.e(a), f, cfg))
            out.append(check_equal("newton", "intertwines", P(map=f"{b.name()}->{a.name()}"),
                                   z.e(a) @ g @ z.e(b), g, cfg))
    for side, lst in (("odd", z.odd), ("even", z.even)):
        for x in lst:
            for y in lst:
                name = "composite-identity" if x == y else "cross-vanish"
                out.append(check_equal("newton", name, P(side=side, src=x.name(), tgt=y.name()),
                                       z.composite(side, x, y), z.expected(x, y), cfg))
    out += orthog_checks(N, k)
    return out


def orthog_checks(N: int, k: int) -> list[CheckResult]:
    """e_A = sum_j E_j + (k-1) e_A (id (x) T_2) e_A, with orthogonal terms."""
    cfg = EvalConfig(N, Mode.ZETA)
    P = lambda **kw: {"N": N, "k": k, **kw}  # noqa: E731
    eA = evaluate(tensor(clasp_anti(k - 1), id_m(1)), cfg)
    eB = evaluate(tensor(id_m(k - 2), extremal_T(N, 2)) if k > 2 else extremal_T(N, 2), cfg)
    rest = (eA @ eB @ eA).scale(Fraction(k - 1))
    pieces = []
    for j in range(1, k + 1):
        f, g = bottom_maps(N, k, j)
        pieces.append(SparseOperator.zero(eA.src, eA.tgt, N) if f is None else evaluate(compose(g, f), cfg))
    out = [check_equal("newton", "orthog-sum", P(), sum(pieces, rest), eA, cfg)]
    terms = pieces + [rest]
    for i, x in enumerate(terms):
        for j, y in enumerate(terms):
            want = x if i == j else SparseOperator.zero(x.src, x.tgt, N)
            out.append(check_equal("newton", "orthog-pair", P(i=i + 1, j=j + 1), x @ y, want, cfg))
    return out


def kN_remark_checks(N: int) -> list[CheckResult]:
    cfg = EvalConfig(N, Mode.ZETA)
    P = lambda **kw: {"N": N, **kw}  # noqa: E731
    V = clasp_anti(N)

    def shifted(x):
        return compose_all(wrap_at(N, N, -x), V, wrap_at(N, N, x))

    def mid(d):
        return compose_all(V, wrap_at(N, N, d), V)

    out = []
    ops = [evaluate(shifted(x), cfg) for x in range(1, N + 1)]
    for i, a in enumerate(ops):
        out.append(check_true("newton", "remark-rank", P(x=i + 1), lambda a=a: (rank(a) == 1, f"rank {rank(a)}")))
        for j, b in enumerate(ops):
            want = a if i == j else SparseOperator.zero(a.src, a.tgt, N)
            out.append(check_equal("newton", "remark-orthogonal", P(x=i + 1, y=j + 1), a @ b, want, cfg))
    for k in range(1, N + 1):
        for l in range(1, N + 1):
            want = evaluate(V, cfg) if k == l else SparseOperator.zero(strands(N), strands(N), N)
            out.append(check_equal("newton", "remark-delta", P(k=k, l=l), mid(k - l), want, cfg))
    if N >= 2:
        eA = evaluate(tensor(clasp_anti(N - 1), id_m(1)), cfg)
        eB = evaluate(tensor(id_m(N - 2), extremal_T(N, 2)) if N > 2 else extremal_T(N, 2), cfg)
        lhs = eA - (eA @ eB @ eA).scale(Fraction(N - 1))
        out.append(check_equal("newton", "remark-sum", P(), lhs, sum(ops[1:], ops[0]), cfg))
    return out

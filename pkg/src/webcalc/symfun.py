"""Symmetric polynomials in X_1..X_N and characters of idempotents."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import factorial

from . import linalg
from .checks import CheckResult, check_true
from .evaluator import EvalConfig, SparseOperator, evaluate
from .scalars import LaurentX, Mode, elementary_symmetric, render

Poly = dict  # exponent tuple -> Fraction, no zero values


def _clean(d: dict) -> Poly:
    return {e: Fraction(c) for e, c in d.items() if c != 0}


def _from_scalar(x, N: int) -> Poly:
    if isinstance(x, LaurentX):
        return dict(x.t)
    return _clean({(0,) * N: x})


def _to_scalar(p: Poly, N: int):
    return LaurentX.make(N, p)


def _mul(a: Poly, b: Poly) -> Poly:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return _clean(out)


def _add(a: Poly, b: Poly, s: int = 1) -> Poly:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + s * c
    return _clean(out)


def _scale(a: Poly, c) -> Poly:
    return _clean({e: v * c for e, v in a.items()})


@dataclass(frozen=True)
class SymPoly:
    N: int
    terms: tuple  # sorted (exponent, coefficient) pairs

    @staticmethod
    def of(p: Poly, N: int, check: bool = True) -> "SymPoly":
        sp = SymPoly(N, tuple(sorted(_clean(p).items())))
        if check and not sp.is_symmetric():
            raise ValueError(f"not symmetric: {sp}")
        return sp

    @property
    def poly(self) -> Poly:
        return dict(self.terms)

    def is_symmetric(self) -> bool:
        p = self.poly
        for i in range(self.N - 1):
            sw = {e[:i] + (e[i + 1], e[i]) + e[i + 2:]: c for e, c in p.items()}
            if sw != p:
                return False
        return True

    def __add__(self, o):
        return SymPoly.of(_add(self.poly, o.poly), self.N, False)

    def __sub__(self, o):
        return SymPoly.of(_add(self.poly, o.poly, -1), self.N, False)

    def __mul__(self, o):
        if isinstance(o, SymPoly):
            return SymPoly.of(_mul(self.poly, o.poly), self.N, False)
        return SymPoly.of(_scale(self.poly, Fraction(o)), self.N, False)

    __rmul__ = __mul__

    def scalar(self):
        return _to_scalar(self.poly, self.N)

    def __str__(self):
        return render(self.scalar())


def sym_basis(kind: str, param, N: int) -> SymPoly:
    """e_j, h_j, p_j or the monomial symmetric m_lambda."""
    X = [LaurentX.var(N, i) for i in range(1, N + 1)]
    if kind == "e":
        return SymPoly.of(_from_scalar(elementary_symmetric(X, param), N), N)
    if kind == "h":
        d: dict = {}
        for combo in combinations_with_replacement(range(N), param):
            e = [0] * N
            for i in combo:
                e[i] += 1
            d[tuple(e)] = d.get(tuple(e), 0) + 1
        return SymPoly.of(d, N)
    if kind == "p":
        if param == 0:
            return SymPoly.of({(0,) * N: N}, N)
        return SymPoly.of({tuple(param if j == i else 0 for j in range(N)): 1 for i in range(N)}, N)
    if kind == "m":
        if len(param) > N:
            return SymPoly.of({}, N)
        lam = tuple(sorted(param, reverse=True)) + (0,) * (N - len(param))
        return SymPoly.of({e: 1 for e in set(permutations(lam))}, N)
    raise ValueError(f"unknown basis {kind!r}")


def newton_identity_check(k: int, N: int) -> bool:
    """p_k = (-1)^{k-1} k e_k - sum_{j<k} (-1)^{k-j} e_{k-j} p_j."""
    e = lambda j: sym_basis("e", j, N)  # noqa: E731
    p = lambda j: sym_basis("p", j, N)  # noqa: E731
    rhs = e(k) * ((-1) ** (k - 1) * k)
    for j in range(1, k):
        rhs = rhs - (e(k - j) * p(j)) * ((-1) ** (k - j))
    return rhs == p(k)


def e_expansion(f: SymPoly) -> dict:
    """Write a symmetric polynomial as sum c * e_1^a1 ... e_N^aN, peeling
    off the lex-largest monomial each step.  Keys are exponent tuples (a_i)."""
    N = f.N
    es = [sym_basis("e", j, N) for j in range(1, N + 1)]
    one = SymPoly.of({(0,) * N: 1}, N)
    rest, out = f, {}
    while rest.terms:
        lam, c = max(rest.terms)
        if any(lam[i] < lam[i + 1] for i in range(N - 1)) or lam[-1] < 0:
            raise ValueError("expansion needs a polynomial symmetric input")
        a = tuple(lam[i] - (lam[i + 1] if i + 1 < N else 0) for i in range(N))
        term = one
        for i, ai in enumerate(a):
            for _ in range(ai):
                term = term * es[i]
        out[a] = out.get(a, 0) + c
        rest = rest - term * c
    return out


def e_expansion_text(f: SymPoly) -> str:
    parts = []
    for a, c in sorted(e_expansion(f).items(), reverse=True):
        mono = "*".join(f"e{i + 1}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(a) if x)
        parts.append((c, mono))
    if not parts:
        return "0"
    text = ""
    for i, (c, mono) in enumerate(parts):
        sgn = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else f"{mag}")
        text += (("-" if sgn == "-" else "") if i == 0 else f" {sgn} ") + body
    return text


# ------------------------------------------------------------- characters

def weight(idx: tuple, obj, N: int) -> tuple:
    w = [0] * N
    for S, s in zip(idx, obj):
        for c in S:
            w[c - 1] += 1 if s.up else -1
    return tuple(w)


@dataclass(frozen=True)
class Character:
    N: int
    mult: tuple  # sorted (weight, multiplicity)

    def total(self) -> int:
        return sum(m for _, m in self.mult)

    def sympoly(self, check: bool = True) -> SymPoly:
        return SymPoly.of({w: m for w, m in self.mult}, self.N, check)

    def __str__(self):
        return str(self.sympoly(check=False))


def character(op: SparseOperator, check_idempotent: bool = True) -> Character:
    N = op.N
    if op.src != op.tgt:
        raise ValueError("character needs an endomorphism")
    if check_idempotent and op @ op != op:
        raise ValueError("not an idempotent")
    blocks: dict = {}
    for s, col in op.cols.items():
        ws = weight(s, op.src, N)
        for t in col:
            if weight(t, op.tgt, N) != ws:
                raise ValueError("operator does not preserve weights")
        blocks.setdefault(ws, []).append(dict(col))
    mult = {}
    for w, rows in blocks.items():
        r = linalg.sparse_rank(linalg.renumber(rows))
        if r:
            mult[w] = r
    return Character(N, tuple(sorted(mult.items())))


def monomial_expansion(f: SymPoly) -> dict:
    """Coefficients of f in the monomial symmetric basis, keyed by partition."""
    out = {}
    for e, c in f.terms:
        lam = tuple(sorted(e, reverse=True))
        if tuple(e) == lam:
            out[tuple(x for x in lam if x)] = c
    return out


# ----------------------------------------------------------------- suite

def chars_checks(N: int) -> list[CheckResult]:
    from .newton import idempotent
    from .projectors import clasp_anti, clasp_sym, extremal_T, id_m, orbit_O, partition_idempotent
    from .webcore import tensor

    cfg = EvalConfig(N, Mode.ZETA)
    ch = lambda e: character(evaluate(e, cfg)).sympoly()  # noqa: E731
    out = []
    P = lambda **kw: {"N": N, **kw}  # noqa: E731

    def eq(name, params, fn, want):
        def run():
            got = fn()
            return got == want, f"got {got}, expected {want}"
        out.append(check_true("chars", name, params, run))

    for m in range(1, 6):
        eq("T-powersum", P(m=m), lambda m=m: ch(extremal_T(N, m)), sym_basis("p", m, N))
    for m in range(1, N + 1):
        eq("V-elementary", P(m=m), lambda m=m: ch(clasp_anti(m)), sym_basis("e", m, N))
    if N <= 3:
        for m in range(1, 5):
            eq("Psym-complete", P(m=m), lambda m=m: ch(clasp_sym(m)), sym_basis("h", m, N))
    for n in range(1, N + 1):
        eq("O-elementary", P(n=n), lambda n=n: ch(orbit_O(N, n)), sym_basis("e", n, N) * factorial(n))
    for k in range(1, 7):
        out.append(check_true("chars", "newton-polynomial", P(k=k), lambda k=k: newton_identity_check(k, N)))
    if N <= 3:
        for k in range(2, 5):
            def sides(k=k):
                odd = [ch(idempotent(N, k, l)) for l in range(1, k + 1, 2)]
                even = [ch(idempotent(N, k, l)) for l in range(2, k + 1, 2)] + [ch(idempotent(N, k, 0))] * k
                lhs, rhs = odd[0], even[0]
                for x in odd[1:]:
                    lhs = lhs + x
                for x in even[1:]:
                    rhs = rhs + x
                e, p = (lambda j: sym_basis("e", j, N)), (lambda j: sym_basis("p", j, N))
                formula_l = sum((e(k - l) * p(l) for l in range(3, k + 1, 2)), e(k - 1) * p(1))
                formula_r = sum((e(k - l) * p(l) for l in range(2, k + 1, 2)), e(k) * k)
                ok = lhs == rhs == formula_l == formula_r
                return ok, f"odd {lhs}, even {rhs}"
            out.append(check_true("chars", "newton-categorified", P(k=k), sides))
    for parts in ((2, 1), (1, 1), (2, 2), (3, 1), (1, 1, 1)):
        if len(parts) > N or sum(parts) > 4:
            continue
        def part(parts=parts):
            f = ch(partition_idempotent(N, parts))
            mex = monomial_expansion(f)
            lead = max(mex)
            ok = all(c > 0 and c.denominator == 1 for c in mex.values()) and \
                lead == tuple(sorted(parts, reverse=True))
            rebuilt = SymPoly.of({}, N)
            for mu, c in mex.items():
                rebuilt = rebuilt + sym_basis("m", mu, N) * c
            return ok and rebuilt == f, f"m-expansion {mex}"
        out.append(check_true("chars", "partition-monomial", P(parts="+".join(map(str, parts))), part))
    eq("additive", P(), lambda: ch(extremal_T(N, 2)) + ch(orbit_O(N, 2)), sym_basis("p", 1, N) * sym_basis("p", 1, N))
    eq("multiplicative", P(), lambda: ch(tensor(extremal_T(N, 2), clasp_anti(2))),
       sym_basis("p", 2, N) * sym_basis("e", 2, N))
    eq("identity", P(), lambda: ch(id_m(3)), sym_basis("h", 1, N) * sym_basis("h", 1, N) * sym_basis("h", 1, N))
    return out

"""Exact coefficient rings for the evaluation functor.

Values are plain ``Fraction`` objects whenever they happen to be rational;
otherwise they are one of ``Cyclo`` (an element of Q(zeta_N)), ``LaurentQ``
(Laurent polynomial in q) or ``LaurentX`` (Laurent polynomial in X_1..X_N).
Collapsing rational values to ``Fraction`` keeps the common case fast and
makes equality canonical across the union.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union


class Mode(enum.Enum):
    Q_GENERIC = "q"
    ZETA = "zeta"
    FORMAL_X = "formalX"

    @classmethod
    def parse(cls, text: str) -> "Mode":
        for m in cls:
            if m.value.lower() == text.lower() or m.name.lower() == text.lower():
                return m
        raise ValueError(f"unknown mode {text!r}")


# ---------------------------------------------------------------- polynomials

def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(_poly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
    return _poly_trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(num)


class _CycloData:
    """Reduction tables for Q(zeta_n)."""

    def __init__(self, n: int):
        self.n = n
        phi = cyclotomic_polynomial(n)
        self.deg = d = len(phi) - 1
        # x^j mod phi for 0 <= j < max(2d - 1, n)
        red = []
        cur = [Fraction(0)] * d
        cur[0] = Fraction(1)
        for _ in range(max(2 * d - 1, n + 1)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * phi[i]
        self.red = red


@lru_cache(maxsize=None)
def _cdata(n: int) -> _CycloData:
    return _CycloData(n)


Rat = Fraction


class Cyclo:
    """Irrational element of Q(zeta_n), coefficients reduced modulo Phi_n."""

    __slots__ = ("n", "c", "_h")

    def __init__(self, n: int, c: tuple):
        self.n = n
        self.c = c
        self._h = None

    # construction helpers -------------------------------------------------
    @staticmethod
    def make(n: int, coeffs: Iterable) -> "Scalar":
        c = tuple(Fraction(x) for x in coeffs)
        if all(x == 0 for x in c[1:]):
            return c[0] if c else Fraction(0)
        return Cyclo(n, c)

    @staticmethod
    def _coeffs(x, n: int, d: int) -> tuple:
        if isinstance(x, Cyclo):
            if x.n != n:
                raise TypeError("cyclotomic orders differ")
            return x.c
        return (Fraction(x),) + (Fraction(0),) * (d - 1)

    # arithmetic -----------------------------------------------------------
    def __add__(self, o):
        if isinstance(o, (int, Fraction)):
            c = list(self.c)
            c[0] += o
            return Cyclo.make(self.n, c)
        if not isinstance(o, Cyclo):
            return NotImplemented
        if o.n != self.n:
            raise TypeError("cyclotomic orders differ")
        return Cyclo.make(self.n, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.n, tuple(-a for a in self.c))

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            if o == 0:
                return Fraction(0)
            return Cyclo(self.n, tuple(a * o for a in self.c))
        if not isinstance(o, Cyclo):
            return NotImplemented
        if o.n != self.n:
            raise TypeError("cyclotomic orders differ")
        data = _cdata(self.n)
        d = data.deg
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:d])
        for j in range(d, 2 * d - 1):
            cj = prod[j]
            if cj:
                r = data.red[j]
                for i in range(d):
                    if r[i]:
                        out[i] += cj * r[i]
        return Cyclo.make(self.n, out)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        data = _cdata(self.n)
        d = data.deg
        # columns: self * x^j reduced
        basis = []
        for j in range(d):
            e = [Fraction(0)] * d
            e[j] = Fraction(1)
            basis.append(Cyclo._coeffs(self * Cyclo.make(self.n, e), self.n, d))
        # solve sum_j y_j basis[j] = 1
        mat = [[basis[j][i] for j in range(d)] + [Fraction(1 if i == 0 else 0)] for i in range(d)]
        for col in range(d):
            piv = next(r for r in range(col, d) if mat[r][col] != 0)
            mat[col], mat[piv] = mat[piv], mat[col]
            pv = mat[col][col]
            mat[col] = [x / pv for x in mat[col]]
            for r in range(d):
                if r != col and mat[r][col] != 0:
                    f = mat[r][col]
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
        return Cyclo.make(self.n, [mat[i][d] for i in range(d)])

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction)):
            return self * (Fraction(1) / Fraction(o))
        if isinstance(o, Cyclo):
            return self * o.inverse()
        return NotImplemented

    def __rtruediv__(self, o):
        return self.inverse() * o

    def __pow__(self, e: int):
        return power(self, e)

    def __eq__(self, o):
        if isinstance(o, Cyclo):
            return self.n == o.n and self.c == o.c
        return False

    def __hash__(self):
        if self._h is None:
            self._h = hash(("cy", self.n, self.c))
        return self._h

    def __bool__(self):
        return True

    def __repr__(self):
        return f"Cyclo({render(self)})"


class LaurentQ:
    """Non-constant Laurent polynomial in q with rational coefficients."""

    __slots__ = ("t", "_h")

    def __init__(self, terms: tuple):
        self.t = terms  # sorted tuple of (exp, coeff), coeff != 0
        self._h = None

    @staticmethod
    def make(d: dict) -> "Scalar":
        items = tuple(sorted((e, Fraction(c)) for e, c in d.items() if c != 0))
        if not items:
            return Fraction(0)
        if len(items) == 1 and items[0][0] == 0:
            return items[0][1]
        return LaurentQ(items)

    @staticmethod
    def monomial(e: int, c=1) -> "Scalar":
        return LaurentQ.make({e: Fraction(c)})

    def asdict(self) -> dict:
        return dict(self.t)

    @staticmethod
    def _d(x) -> dict:
        if isinstance(x, LaurentQ):
            return dict(x.t)
        if isinstance(x, (int, Fraction)):
            return {0: Fraction(x)} if x else {}
        raise TypeError(f"cannot combine LaurentQ with {type(x).__name__}")

    def __add__(self, o):
        if not isinstance(o, (int, Fraction, LaurentQ)):
            return NotImplemented
        d = dict(self.t)
        for e, c in LaurentQ._d(o).items():
            d[e] = d.get(e, 0) + c
        return LaurentQ.make(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ(tuple((e, -c) for e, c in self.t))

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            if o == 0:
                return Fraction(0)
            return LaurentQ(tuple((e, c * o) for e, c in self.t))
        if not isinstance(o, LaurentQ):
            return NotImplemented
        d: dict = {}
        for e1, c1 in self.t:
            for e2, c2 in o.t:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentQ.make(d)

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self.t) == 1

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction)):
            return self * (Fraction(1) / Fraction(o))
        if isinstance(o, LaurentQ) and o.is_monomial():
            (e, c), = o.t
            return self * LaurentQ.monomial(-e, 1 / c)
        raise ZeroDivisionError("division by a non-monomial Laurent polynomial")

    def __rtruediv__(self, o):
        if self.is_monomial():
            (e, c), = self.t
            return LaurentQ.monomial(-e, 1 / c) * o
        raise ZeroDivisionError("division by a non-monomial Laurent polynomial")

    def __pow__(self, e: int):
        return power(self, e)

    def __eq__(self, o):
        return isinstance(o, LaurentQ) and self.t == o.t

    def __hash__(self):
        if self._h is None:
            self._h = hash(("lq", self.t))
        return self._h

    def __bool__(self):
        return True

    def __repr__(self):
        return f"LaurentQ({render(self)})"


class LaurentX:
    """Non-constant Laurent polynomial in X_1..X_n with rational coefficients."""

    __slots__ = ("n", "t", "_h")

    def __init__(self, n: int, terms: tuple):
        self.n = n
        self.t = terms  # sorted tuple of (exponent tuple, coeff)
        self._h = None

    @staticmethod
    def make(n: int, d: dict) -> "Scalar":
        items = tuple(sorted((e, Fraction(c)) for e, c in d.items() if c != 0))
        if not items:
            return Fraction(0)
        if len(items) == 1 and not any(items[0][0]):
            return items[0][1]
        return LaurentX(n, items)

    @staticmethod
    def monomial(n: int, exps, c=1) -> "Scalar":
        return LaurentX.make(n, {tuple(exps): Fraction(c)})

    @staticmethod
    def var(n: int, i: int, p: int = 1) -> "Scalar":
        e = [0] * n
        e[i - 1] = p
        return LaurentX.monomial(n, e)

    def _d(self, x) -> dict:
        if isinstance(x, LaurentX):
            if x.n != self.n:
                raise TypeError("variable counts differ")
            return dict(x.t)
        if isinstance(x, (int, Fraction)):
            return {(0,) * self.n: Fraction(x)} if x else {}
        raise TypeError(f"cannot combine LaurentX with {type(x).__name__}")

    def __add__(self, o):
        if not isinstance(o, (int, Fraction, LaurentX)):
            return NotImplemented
        d = dict(self.t)
        for e, c in self._d(o).items():
            d[e] = d.get(e, 0) + c
        return LaurentX.make(self.n, d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentX(self.n, tuple((e, -c) for e, c in self.t))

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            if o == 0:
                return Fraction(0)
            return LaurentX(self.n, tuple((e, c * o) for e, c in self.t))
        if not isinstance(o, LaurentX):
            return NotImplemented
        if o.n != self.n:
            raise TypeError("variable counts differ")
        d: dict = {}
        for e1, c1 in self.t:
            for e2, c2 in o.t:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentX.make(self.n, d)

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self.t) == 1

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction)):
            return self * (Fraction(1) / Fraction(o))
        if isinstance(o, LaurentX) and o.is_monomial():
            (e, c), = o.t
            return self * LaurentX.monomial(self.n, [-x for x in e], 1 / c)
        raise ZeroDivisionError("division by a non-monomial Laurent polynomial")

    def __rtruediv__(self, o):
        if self.is_monomial():
            (e, c), = self.t
            return LaurentX.monomial(self.n, [-x for x in e], 1 / c) * o
        raise ZeroDivisionError("division by a non-monomial Laurent polynomial")

    def __pow__(self, e: int):
        return power(self, e)

    def __eq__(self, o):
        return isinstance(o, LaurentX) and self.n == o.n and self.t == o.t

    def __hash__(self):
        if self._h is None:
            self._h = hash(("lx", self.n, self.t))
        return self._h

    def __bool__(self):
        return True

    def __repr__(self):
        return f"LaurentX({render(self)})"


Scalar = Union[Fraction, Cyclo, LaurentQ, LaurentX]


def power(x, e: int):
    if e < 0:
        x = Fraction(1) / x if isinstance(x, (int, Fraction)) else 1 / x
        e = -e
    result: Scalar = Fraction(1)
    base = x
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


# ------------------------------------------------------------- named values

def zeta_power(n: int, k: int) -> Scalar:
    """Canonical representative of zeta_n^k."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return Fraction(1)
    data = _cdata(n)
    return Cyclo.make(n, data.red[k % n])


def elementary_symmetric(values: list, k: int) -> Scalar:
    # Horner-style generating function instead of the combinatorial sum
    e = [Fraction(1)] + [Fraction(0)] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e[k]


def elementary_symmetric_at_zeta(n: int, k: int) -> Scalar:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= N")
    return elementary_symmetric([zeta_power(n, i) for i in range(1, n + 1)], k)


def specialize(s: Scalar, assignment: str, n: int | None = None) -> Scalar:
    """Ring homomorphism q -> 1 (``"q=1"``) or X_i -> zeta^i (``"X=zeta"``)."""
    if assignment == "q=1":
        if isinstance(s, LaurentQ):
            return sum((c for _, c in s.t), Fraction(0))
        if isinstance(s, (LaurentX, Cyclo)):
            raise TypeError("q=1 applies to Laurent polynomials in q only")
        return s
    if assignment == "X=zeta":
        if isinstance(s, LaurentX):
            total: Scalar = Fraction(0)
            for e, c in s.t:
                term: Scalar = c
                for i, p in enumerate(e, start=1):
                    if p:
                        term = term * zeta_power(s.n, i * p)
                total = total + term
            return total
        if isinstance(s, (LaurentQ, Cyclo)):
            raise TypeError("X=zeta applies to Laurent polynomials in X only")
        return s
    raise ValueError(f"unknown assignment {assignment!r}")


# ---------------------------------------------------------------- rendering

def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join(terms: list[tuple[Fraction, str]]) -> str:
    """terms: (coefficient, monomial text or '')."""
    if not terms:
        return "0"
    out = []
    for i, (c, mono) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{_frac_text(a)}*{mono}"
        else:
            body = _frac_text(a)
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _pow_text(var: str, e: int) -> str:
    return var if e == 1 else f"{var}^{e}"


def render(x: Scalar) -> str:
    if isinstance(x, (int, Fraction)):
        return _frac_text(Fraction(x))
    if isinstance(x, Cyclo):
        terms = [(c, _pow_text("z", i) if i else "") for i, c in enumerate(x.c) if c]
        return _join(terms[::-1])
    if isinstance(x, LaurentQ):
        terms = [(c, _pow_text("q", e) if e else "") for e, c in x.t]
        return _join(terms[::-1])
    if isinstance(x, LaurentX):
        terms = []
        for e, c in sorted(x.t, reverse=True):
            mono = "*".join(_pow_text(f"X{i}", p) for i, p in enumerate(e, start=1) if p)
            terms.append((c, mono))
        return _join(terms)
    raise TypeError(type(x))


# ------------------------------------------------------------------ parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(X\d+)|([qz])|(\*\*|[-+*/^()]))")


class ScalarSyntaxError(ValueError):
    pass


def tokenize_scalar(text: str, pos: int = 0) -> list[tuple[str, str, int]]:
    toks = []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ScalarSyntaxError(f"unexpected character {text[pos]!r} at column {pos + 1}")
        kind = ["int", "xvar", "var", "op"][m.lastindex - 1]
        val = m.group(m.lastindex)
        if val == "**":
            val = "^"
        toks.append((kind, val, m.start(m.lastindex)))
        pos = m.end()
    return toks


class _ScalarParser:
    def __init__(self, toks, ring: "ScalarRing"):
        self.toks = toks
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, -1)

    def take(self, val=None):
        tok = self.peek()
        if tok[0] is None or (val is not None and tok[1] != val):
            raise ScalarSyntaxError(f"expected {val or 'token'} at column {tok[2] + 1}")
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        val = self.term() * sign
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            val = val + t if op == "+" else val - t
        return val

    def term(self):
        val = self.factor()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            f = self.factor()
            val = val * f if op == "*" else _div(val, f)
        return val

    def factor(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            kind, val, col = self.take()
            if kind != "int":
                raise ScalarSyntaxError(f"integer exponent expected at column {col + 1}")
            base = power(base, -int(val) if neg else int(val))
        return base

    def atom(self):
        kind, val, col = self.take()
        if kind == "int":
            return Fraction(int(val))
        if val == "(":
            v = self.expr()
            self.take(")")
            return v
        if kind == "var" or kind == "xvar":
            return self.ring.variable(val)
        raise ScalarSyntaxError(f"unexpected {val!r} at column {col + 1}")


def _div(a, b):
    if isinstance(b, (int, Fraction)):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a * (Fraction(1) / Fraction(b))
    return a / b


# ------------------------------------------------------------------- rings

class ScalarRing:
    """Mode-tagged coefficient ring used for one evaluation run."""

    def __init__(self, mode: Mode, n: int):
        self.mode = mode
        self.n = n

    def __repr__(self):
        return f"ScalarRing({self.mode.value}, N={self.n})"

    def __eq__(self, o):
        return isinstance(o, ScalarRing) and (self.mode, self.n) == (o.mode, o.n)

    def __hash__(self):
        return hash((self.mode, self.n))

    @property
    def is_field(self) -> bool:
        return self.mode is Mode.ZETA

    @property
    def generic_q(self) -> bool:
        return self.mode is Mode.Q_GENERIC

    def variable(self, name: str) -> Scalar:
        if name == "q":
            if self.mode is not Mode.Q_GENERIC:
                raise ScalarSyntaxError("q is only available in mode q")
            return LaurentQ.monomial(1)
        if name == "z":
            if self.mode is not Mode.ZETA:
                raise ScalarSyntaxError("z is only available in mode zeta")
            return zeta_power(self.n, 1)
        if name.startswith("X"):
            if self.mode is not Mode.FORMAL_X:
                raise ScalarSyntaxError("X variables are only available in mode formalX")
            i = int(name[1:])
            if not 1 <= i <= self.n:
                raise ScalarSyntaxError(f"{name} out of range for N={self.n}")
            return LaurentX.var(self.n, i)
        raise ScalarSyntaxError(f"unknown variable {name}")

    def q_pow(self, e: int) -> Scalar:
        if self.mode is Mode.Q_GENERIC and e:
            return LaurentQ.monomial(e)
        return Fraction(1)

    def mq_pow(self, e: int) -> Scalar:
        """(-q)^e."""
        sign = -1 if e % 2 else 1
        if self.mode is Mode.Q_GENERIC and e:
            return LaurentQ.monomial(e, sign)
        return Fraction(sign)

    def gamma(self, i: int, p: int = 1) -> Scalar:
        if self.mode is Mode.ZETA:
            return zeta_power(self.n, i * p)
        if self.mode is Mode.FORMAL_X:
            return LaurentX.var(self.n, i, p)
        raise ValueError("wrap eigenvalues need mode zeta or formalX")

    def gamma_prod(self, subset: Iterable[int], p: int = 1) -> Scalar:
        if self.mode is Mode.ZETA:
            return zeta_power(self.n, p * sum(subset))
        if self.mode is Mode.FORMAL_X:
            e = [0] * self.n
            for i in subset:
                e[i - 1] += p
            return LaurentX.monomial(self.n, e)
        raise ValueError("wrap eigenvalues need mode zeta or formalX")

    def parse(self, text: str) -> Scalar:
        p = _ScalarParser(tokenize_scalar(text), self)
        v = p.expr()
        if p.i != len(p.toks):
            raise ScalarSyntaxError(f"trailing input at column {p.toks[p.i][2] + 1}")
        return v

    @staticmethod
    def render(x: Scalar) -> str:
        return render(x)

    @staticmethod
    def invert_q(x: Scalar) -> Scalar:
        if isinstance(x, LaurentQ):
            return LaurentQ.make({-e: c for e, c in x.t})
        return x

    def quantum_int(self, n: int) -> Scalar:
        if self.mode is not Mode.Q_GENERIC:
            return Fraction(n)
        if n == 0:
            return Fraction(0)
        sgn = 1 if n > 0 else -1
        m = abs(n)
        return LaurentQ.make({e: sgn for e in range(-(m - 1), m, 2)})

    def quantum_binomial(self, n: int, k: int) -> Scalar:
        """Generalized quantum binomial [n][n-1]...[n-k+1]/[k]!."""
        if k < 0:
            return Fraction(0)
        if self.mode is not Mode.Q_GENERIC:
            num = Fraction(1)
            for i in range(k):
                num *= n - i
            den = 1
            for i in range(1, k + 1):
                den *= i
            return num / den
        num: Scalar = Fraction(1)
        for i in range(k):
            num = num * self.quantum_int(n - i)
        den: Scalar = Fraction(1)
        for i in range(1, k + 1):
            den = den * self.quantum_int(i)
        return laurent_exact_div(num, den)


def laurent_exact_div(a: Scalar, b: Scalar) -> Scalar:
    """Exact division of Laurent polynomials in q (raises if inexact)."""
    if isinstance(b, (int, Fraction)):
        return a * (Fraction(1) / Fraction(b))
    ad = LaurentQ._d(a)
    bd = LaurentQ._d(b)
    if not ad:
        return Fraction(0)
    bmin = min(bd)
    bshift = [bd.get(bmin + i, Fraction(0)) for i in range(max(bd) - bmin + 1)]
    amin = min(ad)
    ashift = [ad.get(amin + i, Fraction(0)) for i in range(max(ad) - amin + 1)]
    quo, rem = _poly_divmod(ashift, bshift)
    if _poly_trim(list(rem)):
        raise ArithmeticError("inexact Laurent division")
    return LaurentQ.make({amin - bmin + i: c for i, c in enumerate(quo)})


def is_zero(x: Scalar) -> bool:
    return not isinstance(x, (Cyclo, LaurentQ, LaurentX)) and x == 0


def subsets(n: int, k: int) -> list[tuple[int, ...]]:
    if k < 0 or k > n:
        return []
    return list(combinations(range(1, n + 1), k))

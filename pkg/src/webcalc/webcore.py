"""Boundary objects, web generators, words and the textual web DSL.

A word is a bottom-to-top stack of slices; each slice lists generators left
to right whose sources concatenate to the slice input.  Linear combinations,
composites and tensor products of words form a small expression tree
(``WebExpr``) that the evaluator walks with memoisation, so large products
such as the extremal projectors never need to be expanded into words.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import Mode, Scalar, ScalarRing, ScalarSyntaxError, is_zero, render

UP = "^"
DOWN = "v"


class WebError(ValueError):
    """Base class for web construction errors."""


class BoundaryError(WebError):
    """Slices or expressions whose boundaries do not chain."""


class WebSyntaxError(WebError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + msg)
        self.line = line
        self.col = col


# ------------------------------------------------------------------ strands

@dataclass(frozen=True, slots=True)
class Strand:
    label: int
    orient: str = UP

    def __post_init__(self):
        if self.label < 1:
            raise WebError("strand labels are positive")
        if self.orient not in (UP, DOWN):
            raise WebError(f"bad orientation {self.orient!r}")

    @property
    def up(self) -> bool:
        return self.orient == UP

    def reversed(self) -> "Strand":
        return Strand(self.label, DOWN if self.up else UP)

    def __str__(self):
        return f"{self.label}{self.orient}"


BoundaryObject = tuple  # tuple[Strand, ...]; the empty tuple is the unit


def boundary(spec: str | Iterable = "") -> BoundaryObject:
    """``boundary("1^,2v")`` or an iterable of Strands / (label, orient) pairs."""
    if isinstance(spec, str):
        spec = spec.strip()
        if not spec:
            return ()
        out = []
        for part in spec.split(","):
            m = re.fullmatch(r"\s*(\d+)\s*([\^v])\s*", part)
            if not m:
                raise WebSyntaxError(f"bad strand {part.strip()!r}")
            out.append(Strand(int(m.group(1)), m.group(2)))
        return tuple(out)
    return tuple(s if isinstance(s, Strand) else Strand(*s) for s in spec)


def ups(*labels: int) -> BoundaryObject:
    return tuple(Strand(k, UP) for k in labels)


def obj_text(obj: BoundaryObject) -> str:
    return ",".join(str(s) for s in obj)


# --------------------------------------------------------------- generators

class Generator:
    __slots__ = ()
    annular = False

    @property
    def src(self) -> BoundaryObject:
        raise NotImplementedError

    @property
    def tgt(self) -> BoundaryObject:
        raise NotImplementedError


@dataclass(frozen=True, slots=True)
class Id(Generator):
    label: int
    orient: str = UP

    @property
    def src(self):
        return (Strand(self.label, self.orient),)

    tgt = src

    def text(self):
        return f"id({self.label}{self.orient})"


@dataclass(frozen=True, slots=True)
class CupLeft(Generator):
    """Empty -> (k up, k down)."""
    k: int

    @property
    def src(self):
        return ()

    @property
    def tgt(self):
        return (Strand(self.k, UP), Strand(self.k, DOWN))

    def text(self):
        return f"cupL({self.k})"


@dataclass(frozen=True, slots=True)
class CapLeft(Generator):
    """(k down, k up) -> empty."""
    k: int

    @property
    def src(self):
        return (Strand(self.k, DOWN), Strand(self.k, UP))

    @property
    def tgt(self):
        return ()

    def text(self):
        return f"capL({self.k})"


@dataclass(frozen=True, slots=True)
class CupRight(Generator):
    """Empty -> (k down, k up)."""
    k: int

    @property
    def src(self):
        return ()

    @property
    def tgt(self):
        return (Strand(self.k, DOWN), Strand(self.k, UP))

    def text(self):
        return f"cupR({self.k})"


@dataclass(frozen=True, slots=True)
class CapRight(Generator):
    """(k up, k down) -> empty."""
    k: int

    @property
    def src(self):
        return (Strand(self.k, UP), Strand(self.k, DOWN))

    @property
    def tgt(self):
        return ()

    def text(self):
        return f"capR({self.k})"


@dataclass(frozen=True, slots=True)
class Merge(Generator):
    k: int
    l: int
    orient: str = UP

    @property
    def src(self):
        return (Strand(self.k, self.orient), Strand(self.l, self.orient))

    @property
    def tgt(self):
        return (Strand(self.k + self.l, self.orient),)

    def text(self):
        return f"merge({self.k},{self.l})"


@dataclass(frozen=True, slots=True)
class Split(Generator):
    k: int
    l: int
    orient: str = UP

    @property
    def src(self):
        return (Strand(self.k + self.l, self.orient),)

    @property
    def tgt(self):
        return (Strand(self.k, self.orient), Strand(self.l, self.orient))

    def text(self):
        return f"split({self.k},{self.l})"


@dataclass(frozen=True, slots=True)
class Crossing(Generator):
    """(k o1, l o2) -> (l o2, k o1); sign '+' means the strand entering
    bottom-left passes over."""
    k: int
    l: int
    sign: str = "+"
    orients: tuple = (UP, UP)

    @property
    def src(self):
        return (Strand(self.k, self.orients[0]), Strand(self.l, self.orients[1]))

    @property
    def tgt(self):
        return (Strand(self.l, self.orients[1]), Strand(self.k, self.orients[0]))

    def text(self):
        return f"x({self.k},{self.l},{self.sign})"


@dataclass(frozen=True, slots=True)
class Wrap(Generator):
    label: int
    orient: str
    power: int
    annular = True

    @property
    def src(self):
        return (Strand(self.label, self.orient),)

    tgt = src

    def text(self):
        return f"wrap({self.power})"


@dataclass(frozen=True, slots=True)
class Rotate(Generator):
    """Global rotation: ``power`` times move the first strand to the end."""
    power: int
    obj: BoundaryObject
    annular = True

    @property
    def src(self):
        return self.obj

    @property
    def tgt(self):
        return rotate_object(self.obj, self.power)

    def text(self):
        return f"rot({self.power})"


def rotate_object(obj: BoundaryObject, p: int) -> BoundaryObject:
    if not obj:
        return obj
    p %= len(obj)
    return obj[p:] + obj[:p]


def _concat_src(gens: Sequence[Generator]) -> BoundaryObject:
    return tuple(s for g in gens for s in g.src)


def _concat_tgt(gens: Sequence[Generator]) -> BoundaryObject:
    return tuple(s for g in gens for s in g.tgt)


# -------------------------------------------------------------- expressions

class WebExpr:
    """Scalar-linear combination of webs, kept as an expression tree."""

    __slots__ = ("source", "target", "annular", "_hash")

    def _init(self, source, target, annular):
        self.source = source
        self.target = target
        self.annular = annular
        self._hash = None

    # algebra -----------------------------------------------------------
    def __add__(self, other: "WebExpr") -> "WebExpr":
        return lin([(1, self), (1, other)])

    def __sub__(self, other: "WebExpr") -> "WebExpr":
        return lin([(1, self), (-1, other)])

    def __neg__(self):
        return lin([(-1, self)])

    def __rmul__(self, c) -> "WebExpr":
        return lin([(c, self)])

    def __matmul__(self, other: "WebExpr") -> "WebExpr":
        return compose(self, other)

    def then(self, *others: "WebExpr") -> "WebExpr":
        """Stack ``others`` on top of self (bottom-to-top reading)."""
        out = self
        for o in others:
            out = compose(o, out)
        return out

    def expand(self) -> list[tuple[Scalar, "Word"]]:
        raise NotImplementedError

    def contains_rotate(self) -> bool:
        raise NotImplementedError

    def canonical(self) -> "Lin":
        """Expanded sum of words, duplicates merged, ordered by printed form."""
        acc: dict = {}
        order = []
        for c, w in self.expand():
            if w not in acc:
                acc[w] = Fraction(0)
                order.append(w)
            acc[w] = acc[w] + c
        terms = [(acc[w], w) for w in order if not is_zero(acc[w])]
        terms.sort(key=lambda t: (word_text(t[1]), render(t[0])))
        return Lin(tuple(terms), self.source, self.target, self.annular)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def _key(self):
        raise NotImplementedError


class Word(WebExpr):
    __slots__ = ("slices",)

    def __init__(self, source: BoundaryObject, slices: Sequence[Sequence[Generator]] = ()):
        cur = tuple(source)
        out = []
        annular = False
        for i, sl in enumerate(slices):
            sl = tuple(sl)
            if any(isinstance(g, Rotate) for g in sl) and len(sl) != 1:
                raise BoundaryError(f"slice {i + 1}: rotation must occupy the whole slice")
            if _concat_src(sl) != cur:
                raise BoundaryError(
                    f"slice {i + 1}: input {obj_text(_concat_src(sl))} does not match {obj_text(cur)}")
            annular = annular or any(g.annular for g in sl)
            cur = _concat_tgt(sl)
            out.append(sl)
        self._init(tuple(source), cur, annular)
        self.slices = tuple(out)

    def expand(self):
        return [(Fraction(1), self)]

    def contains_rotate(self):
        return any(isinstance(sl[0], Rotate) for sl in self.slices if sl)

    def _key(self):
        return ("W", self.source, self.slices)

    def __repr__(self):
        return f"Word[{obj_text(self.source)}: {word_text(self)}]"


class Lin(WebExpr):
    __slots__ = ("terms",)

    def __init__(self, terms, source, target, annular):
        self._init(source, target, annular)
        self.terms = tuple(terms)

    def expand(self):
        out = []
        for c, e in self.terms:
            for c2, w in e.expand():
                out.append((c * c2, w))
        return out

    def contains_rotate(self):
        return any(e.contains_rotate() for _, e in self.terms)

    def _key(self):
        return ("L", self.source, self.target, self.terms)


class Comp(WebExpr):
    """outer after inner."""
    __slots__ = ("outer", "inner")

    def __init__(self, outer: WebExpr, inner: WebExpr):
        self._init(inner.source, outer.target, outer.annular or inner.annular)
        self.outer = outer
        self.inner = inner

    def expand(self):
        out = []
        for c1, w1 in self.outer.expand():
            for c2, w2 in self.inner.expand():
                out.append((c1 * c2, Word(w2.source, w2.slices + w1.slices)))
        return out

    def contains_rotate(self):
        return self.outer.contains_rotate() or self.inner.contains_rotate()

    def _key(self):
        return ("C", self.outer, self.inner)


class Tens(WebExpr):
    __slots__ = ("left", "right")

    def __init__(self, left: WebExpr, right: WebExpr):
        self._init(left.source + right.source, left.target + right.target,
                   left.annular or right.annular)
        self.left = left
        self.right = right

    def expand(self):
        out = []
        for c1, w1 in self.left.expand():
            for c2, w2 in self.right.expand():
                out.append((c1 * c2, _tensor_words(w1, w2)))
        return out

    def contains_rotate(self):
        return False

    def _key(self):
        return ("T", self.left, self.right)


def _tensor_words(a: Word, b: Word) -> Word:
    n = max(len(a.slices), len(b.slices))
    sa = list(a.slices) + [tuple(Id(s.label, s.orient) for s in a.target)] * (n - len(a.slices))
    sb = list(b.slices) + [tuple(Id(s.label, s.orient) for s in b.target)] * (n - len(b.slices))
    return Word(a.source + b.source, [x + y for x, y in zip(sa, sb)])


def identity(obj: BoundaryObject | str) -> Word:
    if isinstance(obj, str):
        obj = boundary(obj)
    return Word(tuple(obj))


def lin(terms: Iterable[tuple]) -> WebExpr:
    terms = [(c if not isinstance(c, int) else Fraction(c), e) for c, e in terms]
    if not terms:
        raise WebError("empty linear combination")
    src, tgt = terms[0][1].source, terms[0][1].target
    for _, e in terms:
        if e.source != src or e.target != tgt:
            raise BoundaryError(
                f"summands disagree: {obj_text(e.source)}->{obj_text(e.target)} "
                f"vs {obj_text(src)}->{obj_text(tgt)}")
    return Lin(tuple(terms), src, tgt, any(e.annular for _, e in terms))


def compose(f: WebExpr, g: WebExpr) -> WebExpr:
    """f after g."""
    if g.target != f.source:
        raise BoundaryError(f"cannot compose: {obj_text(g.target)} vs {obj_text(f.source)}")
    if isinstance(f, Word) and isinstance(g, Word):
        return Word(g.source, g.slices + f.slices)
    return Comp(f, g)


def compose_all(*exprs: WebExpr) -> WebExpr:
    """compose_all(a, b, c) = a after b after c."""
    out = exprs[-1]
    for e in reversed(exprs[:-1]):
        out = compose(e, out)
    return out


def tensor(f: WebExpr, g: WebExpr) -> WebExpr:
    if f.contains_rotate() or g.contains_rotate():
        raise WebError("global rotation cannot appear inside a tensor factor")
    if not f.source and not f.target and isinstance(f, Word) and not f.slices:
        return g
    if not g.source and not g.target and isinstance(g, Word) and not g.slices:
        return f
    if isinstance(f, Word) and isinstance(g, Word):
        return _tensor_words(f, g)
    return Tens(f, g)


def tensor_all(*exprs: WebExpr) -> WebExpr:
    out = exprs[0]
    for e in exprs[1:]:
        out = tensor(out, e)
    return out


# ------------------------------------------------------------ winding grade

def _signed(s: Strand) -> int:
    return s.label if s.up else -s.label


def winding_grade(w: WebExpr) -> int:
    """Flow winding number of a word (or of every word of an expression,
    which must agree)."""
    if not isinstance(w, Word):
        grades = {winding_grade(x) for _, x in w.expand()}
        if len(grades) != 1:
            raise WebError(f"expression is not homogeneous: grades {sorted(grades)}")
        return grades.pop()
    total = 0
    for sl in w.slices:
        for g in sl:
            if isinstance(g, Wrap):
                total += g.power * _signed(Strand(g.label, g.orient))
            elif isinstance(g, Rotate):
                cur = g.obj
                if not cur:
                    continue
                if g.power >= 0:
                    for _ in range(g.power):
                        total += _signed(cur[0])
                        cur = rotate_object(cur, 1)
                else:
                    for _ in range(-g.power):
                        total -= _signed(cur[-1])
                        cur = rotate_object(cur, -1)
    return total


# ---------------------------------------------------------------- the DSL

_GEN_RE = re.compile(r"([A-Za-z]+)(?:@(\d+))?\(([^()]*)\)")


def _int(text: str, where) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise WebSyntaxError(f"integer expected, got {text.strip()!r}", *where) from None


def _parse_slice(text: str, cur: BoundaryObject | None, where) -> tuple[list[Generator], BoundaryObject]:
    """Resolve one slice against the current boundary ``cur`` (None if unknown)."""
    pos = 0
    items = []
    text_s = text.strip()
    while pos < len(text_s):
        if text_s[pos].isspace():
            pos += 1
            continue
        m = _GEN_RE.match(text_s, pos)
        if not m:
            raise WebSyntaxError(f"cannot read generator near {text_s[pos:pos + 12]!r}", *where)
        items.append((m.group(1), m.group(2), [a.strip() for a in m.group(3).split(",")] if m.group(3).strip() else []))
        pos = m.end()

    if len(items) == 1 and items[0][0] == "rot":
        if cur is None:
            raise WebSyntaxError("rot needs a known source boundary", *where)
        _, at, args = items[0]
        if at or len(args) != 1:
            raise WebSyntaxError("rot takes one power and no placement", *where)
        return [Rotate(_int(args[0], where), cur)], rotate_object(cur, _int(args[0], where))
    if any(name == "rot" for name, _, _ in items):
        raise WebSyntaxError("rot must be alone in its slice", *where)

    gens: list[Generator] = []
    cursor = 0

    def strand_at(i):
        if cur is None:
            return None
        if i >= len(cur):
            raise BoundaryError(f"placement beyond the boundary {obj_text(cur)}")
        return cur[i]

    for name, at, args in items:
        if at is not None:
            if cur is None:
                raise WebSyntaxError("@ placement needs a known source boundary", *where)
            p = int(at) - 1
            if p < cursor:
                raise BoundaryError(f"{name}@{at} overlaps a previous generator")
            for s in cur[cursor:p]:
                gens.append(Id(s.label, s.orient))
            cursor = p
        ints = lambda n: [_int(a, where) for a in args[:n]]  # noqa: E731
        if name == "id":
            if len(args) != 1:
                raise WebSyntaxError("id takes one argument", *where)
            st = boundary(args[0])
            if len(st) != 1:
                raise WebSyntaxError("id takes one strand", *where)
            g: Generator = Id(st[0].label, st[0].orient)
        elif name in ("cupL", "capL", "cupR", "capR"):
            if len(args) != 1:
                raise WebSyntaxError(f"{name} takes one label", *where)
            g = {"cupL": CupLeft, "capL": CapLeft, "cupR": CupRight, "capR": CapRight}[name](ints(1)[0])
        elif name in ("merge", "split"):
            if len(args) != 2:
                raise WebSyntaxError(f"{name} takes two labels", *where)
            k, l = ints(2)
            s = strand_at(cursor)
            o = s.orient if s is not None else UP
            g = Merge(k, l, o) if name == "merge" else Split(k, l, o)
        elif name == "x":
            if len(args) != 3 or args[2] not in ("+", "-"):
                raise WebSyntaxError("x takes (k,l,+) or (k,l,-)", *where)
            k, l = ints(2)
            s1, s2 = strand_at(cursor), (strand_at(cursor + 1) if cur is not None else None)
            o = (s1.orient, s2.orient) if s1 is not None else (UP, UP)
            g = Crossing(k, l, args[2], o)
        elif name == "wrap":
            if len(args) != 1:
                raise WebSyntaxError("wrap takes one power", *where)
            s = strand_at(cursor)
            if s is None:
                raise WebSyntaxError("wrap needs a known source boundary", *where)
            p = _int(args[0], where)
            g = Wrap(s.label, s.orient, p) if p else Id(s.label, s.orient)
        else:
            raise WebSyntaxError(f"unknown generator {name!r}", *where)
        n_in = len(g.src)
        if cur is not None:
            have = cur[cursor:cursor + n_in]
            if have != g.src:
                raise BoundaryError(f"{name} expects {obj_text(g.src)} but finds {obj_text(have)}")
        gens.append(g)
        cursor += n_in
    if cur is not None:
        for s in cur[cursor:]:
            gens.append(Id(s.label, s.orient))
        src = cur
    else:
        src = _concat_src(gens)
    return gens, src


def parse_word(text: str, source: BoundaryObject | str | None = None, _where=(None, None)) -> Word:
    """Parse ``slice ; slice ; ...``; the source may be inferred when the first
    slice is fully explicit."""
    if isinstance(source, str):
        source = boundary(source)
    text = text.strip()
    if not text:
        if source is None:
            raise WebSyntaxError("empty word needs a source", *_where)
        return Word(source)
    cur = source
    slices = []
    src0 = source
    for i, part in enumerate(text.split(";")):
        if not part.strip():
            raise WebSyntaxError(f"empty slice {i + 1}", *_where)
        try:
            gens, src = _parse_slice(part, cur, _where)
        except BoundaryError as exc:
            raise BoundaryError(f"slice {i + 1}: {exc}") from None
        if src0 is None:
            src0 = src
        slices.append(gens)
        cur = _concat_tgt(gens)
    return Word(src0, slices)


@dataclass
class WebFile:
    """A parsed DSL document."""
    expr: WebExpr
    N: int
    mode: Mode
    annular: bool
    ring: ScalarRing = field(init=False)

    def __post_init__(self):
        self.ring = ScalarRing(self.mode, self.N)


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def parse_web(text: str, N: int | None = None, mode: Mode | str | None = None,
              source: BoundaryObject | str | None = None) -> WebFile:
    """Parse a DSL document: optional header line then ``coef*[word] + ...``."""
    # strip comments, keep offsets
    clean = re.sub(r"#[^\n]*", lambda m: " " * len(m.group()), text)
    header: dict[str, str] = {}
    body_start = 0
    m = re.match(r"\s*(N\s*=[^\n]*)", clean)
    if m:
        for kv in m.group(1).split():
            if "=" not in kv:
                raise WebSyntaxError(f"bad header item {kv!r}", *_line_col(text, m.start(1)))
            key, val = kv.split("=", 1)
            header[key] = val
        body_start = m.end()
    unknown = set(header) - {"N", "mode", "annular", "source"}
    if unknown:
        raise WebSyntaxError(f"unknown header keys {sorted(unknown)}", 1, 1)
    if "N" in header:
        N = int(header["N"])
    if "mode" in header:
        mode = header["mode"]
    if N is None:
        raise WebSyntaxError("N not specified", 1, 1)
    mode = Mode.parse(mode) if isinstance(mode, str) else (mode or Mode.Q_GENERIC)
    if "source" in header:
        source = boundary(header["source"])
    elif isinstance(source, str):
        source = boundary(source)
    ring = ScalarRing(mode, N)
    declared_annular = header.get("annular")

    body = clean[body_start:]
    # split into coefficient text / bracketed word segments
    terms = []
    pos = 0
    while True:
        lb = body.find("[", pos)
        if lb < 0:
            rest = body[pos:].strip()
            if rest:
                raise WebSyntaxError(f"trailing text {rest[:20]!r}", *_line_col(text, body_start + pos))
            break
        rb = body.find("]", lb)
        if rb < 0:
            raise WebSyntaxError("unclosed '['", *_line_col(text, body_start + lb))
        coef_text = body[pos:lb].strip()
        where = _line_col(text, body_start + pos)
        sign = 1
        if terms:
            if not coef_text or coef_text[0] not in "+-":
                raise WebSyntaxError("expected '+' or '-' between terms", *where)
        if coef_text and coef_text[0] in "+-":
            sign = -1 if coef_text[0] == "-" else 1
            coef_text = coef_text[1:].strip()
        if coef_text:
            if not coef_text.endswith("*"):
                raise WebSyntaxError("expected '*' before '['", *where)
            try:
                coef = ring.parse(coef_text[:-1])
            except (ScalarSyntaxError, ZeroDivisionError) as exc:
                raise WebSyntaxError(f"coefficient: {exc}", *where) from None
        else:
            coef = Fraction(1)
        wtext = body[lb + 1:rb]
        wwhere = _line_col(text, body_start + lb + 1)
        w = parse_word(wtext, source, wwhere)
        if source is None:
            source = w.source
        terms.append((coef * sign, w))
        pos = rb + 1
    if not terms:
        raise WebSyntaxError("no terms", 1, 1)
    expr = terms[0][1] if len(terms) == 1 and terms[0][0] == 1 else lin(terms)
    annular = expr.annular if declared_annular is None else declared_annular == "1"
    if expr.annular and not annular:
        raise WebSyntaxError("annular generators in a planar document", 1, 1)
    return WebFile(expr, N, mode, annular)


def word_text(w: Word) -> str:
    return " ; ".join(" ".join(_gen_text(g) for g in sl) for sl in w.slices)


def _gen_text(g: Generator) -> str:
    return g.text()


def print_web(expr: WebExpr, N: int, mode: Mode | str = Mode.Q_GENERIC,
              annular: bool | None = None) -> str:
    if isinstance(mode, str):
        mode = Mode.parse(mode)
    if annular is None:
        annular = expr.annular
    head = f"N={N} mode={mode.value} annular={int(annular)} source={obj_text(expr.source)}"
    canon = expr if isinstance(expr, Word) else expr.canonical()
    terms = canon.expand() if isinstance(canon, Word) else list(canon.terms)
    parts = []
    for i, (c, w) in enumerate(terms):
        body = f"[{word_text(w)}]"
        if c == 1:
            t = body
        else:
            t = f"({render(c)})*{body}"
        parts.append(t if i == 0 else "+ " + t)
    if not parts:
        raise WebError("expression collapsed to zero")
    return head + "\n" + "\n".join(parts) + "\n"

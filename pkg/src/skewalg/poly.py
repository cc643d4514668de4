"""Sparse exact-rational linear combinations of magma words.

MultiPoly is the universal element type: a map word -> nonzero rational,
immutable by convention.  The text format is

    poly     := term (('+'|'-') term)*
    term     := [rational '*']? word
    word     := var | '(' word '*' word ')'
    var      := 'x' int
    rational := int ['/' int]

with an optional leading '-' on the first term and the single token '0'
for the zero polynomial.  format/parse round-trip exactly.
"""

import re

from .rationals import QQ, qq_str
from .words import (HOLE, ShapeTable, degree, format_word, md_key,
                    multidegree_of, relabel, sort_key)


class ParseError(ValueError):
    pass


class MultiPoly:
    """Immutable sparse polynomial over the free magma algebra."""

    __slots__ = ("terms", "_shapes")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if c:
                    clean[w] = c
        self.terms = clean

    def shape_view(self):
        """Cached (shape table, [(shape id, leaves, coeff)]) decomposition.

        Shared by repeated relabelling passes over the same polynomial.
        """
        cached = getattr(self, "_shapes", None)
        if cached is None:
            table = ShapeTable()
            dec = []
            for w, c in self.terms.items():
                sid, lv = table.decompose(w)
                dec.append((sid, lv, c))
            cached = (table, dec)
            self._shapes = cached
        return cached

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly()

    @staticmethod
    def variable(i: int) -> "MultiPoly":
        if i < 1:
            raise ValueError("variable indices start at 1")
        return MultiPoly({i: QQ(1)})

    @staticmethod
    def monomial(word, coeff=1) -> "MultiPoly":
        return MultiPoly({word: QQ(coeff)})

    # -- basic structure ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Terms in canonical word order."""
        return sorted(self.terms.items(), key=lambda t: sort_key(t[0]))

    def coefficient(self, word):
        return self.terms.get(word, QQ(0))

    def variables(self) -> set:
        vs = set()
        for w in self.terms:
            vs.update(multidegree_of(w))
        vs.discard(HOLE)
        return vs

    def multidegrees(self) -> set:
        return {md_key(multidegree_of(w)) for w in self.terms}

    def homogeneous_components(self) -> dict:
        """Group terms by multidegree; keys are md_key tuples."""
        comps = {}
        for w, c in self.terms.items():
            comps.setdefault(md_key(multidegree_of(w)), {})[w] = c
        return {k: MultiPoly(v) for k, v in comps.items()}

    def is_multilinear(self) -> bool:
        mds = self.multidegrees()
        if len(mds) != 1:
            return False
        (md,) = mds
        return all(e == 1 for _, e in md)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            nc = acc.get(w, 0) + c
            if nc:
                acc[w] = nc
            elif w in acc:
                del acc[w]
        out = MultiPoly.__new__(MultiPoly)
        out.terms = acc
        return out

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            nc = acc.get(w, 0) - c
            if nc:
                acc[w] = nc
            elif w in acc:
                del acc[w]
        out = MultiPoly.__new__(MultiPoly)
        out.terms = acc
        return out

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "MultiPoly":
        if not c:
            return MultiPoly()
        out = MultiPoly.__new__(MultiPoly)
        out.terms = {w: c * v for w, v in self.terms.items()}
        return out

    def __rmul__(self, c):
        if isinstance(c, MultiPoly):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        return multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"MultiPoly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


def multiply(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Bilinear extension of the magma pairing; on words (u, v) -> (u v)."""
    acc = {}
    for wp, cp in p.terms.items():
        for wq, cq in q.terms.items():
            key = (wp, wq)
            nc = acc.get(key, 0) + cp * cq
            if nc:
                acc[key] = nc
            elif key in acc:
                del acc[key]
    return MultiPoly(acc)


def commutator(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """[a, b] = ab - ba."""
    return multiply(a, b) - multiply(b, a)


def jordan(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """a o b = ab + ba."""
    return multiply(a, b) + multiply(b, a)


def associator(a: MultiPoly, b: MultiPoly, c: MultiPoly) -> MultiPoly:
    """(a, b, c) = (ab)c - a(bc)."""
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c))


def derived_product(kind: str, *args: MultiPoly) -> MultiPoly:
    """Dispatch on {commutator, jordan, associator}; arity checked."""
    forms = {"commutator": commutator, "jordan": jordan, "associator": associator}
    if kind not in forms:
        raise ValueError(f"unknown product kind {kind!r}")
    return forms[kind](*args)


def _substitute_word(w, images: dict) -> dict:
    """Expansion of one word under leaf -> MultiPoly images; returns a raw dict."""
    if isinstance(w, int):
        try:
            return images[w].terms
        except KeyError:
            raise ValueError(f"no assignment for variable x{w}") from None
    left = _substitute_word(w[0], images)
    right = _substitute_word(w[1], images)
    out = {}
    for wl, cl in left.items():
        for wr, cr in right.items():
            out[(wl, wr)] = cl * cr
    return out


def substitute(p: MultiPoly, assignment: dict) -> MultiPoly:
    """Algebra-homomorphic extension of variable -> MultiPoly images.

    Every variable occurring in p must be assigned.
    """
    acc = {}
    for w, c in p.terms.items():
        for w2, c2 in _substitute_word(w, assignment).items():
            nc = acc.get(w2, 0) + c * c2
            if nc:
                acc[w2] = nc
            elif w2 in acc:
                del acc[w2]
    return MultiPoly(acc)


def relabel_poly(p: MultiPoly, mapping: dict) -> MultiPoly:
    """Leaf relabelling x_v -> x_mapping[v]; cheaper than substitute for renamings."""
    acc = {}
    for w, c in p.terms.items():
        w2 = relabel(w, mapping)
        nc = acc.get(w2, 0) + c
        if nc:
            acc[w2] = nc
        elif w2 in acc:
            del acc[w2]
    return MultiPoly(acc)


# -- text format -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(x\d+|\d+|[()*/+_-])")


def _tokenize(s: str):
    pos = 0
    out = []
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip():
                raise ParseError(f"bad character at position {pos}: {s[pos:pos+8]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, allow_hole=False):
        self.toks = tokens
        self.i = 0
        self.allow_hole = allow_hole

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect=None):
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input")
        if expect is not None and t != expect:
            raise ParseError(f"expected {expect!r}, got {t!r}")
        self.i += 1
        return t

    def word(self):
        t = self.take()
        if t == "(":
            left = self.word()
            self.take("*")
            right = self.word()
            self.take(")")
            return (left, right)
        if t.startswith("x"):
            idx = int(t[1:])
            if idx < 1:
                raise ParseError("variable indices start at 1")
            return idx
        if t == "_" and self.allow_hole:
            return HOLE
        raise ParseError(f"expected a word, got {t!r}")

    def rational(self, sign):
        n = int(self.take())
        if self.peek() == "/":
            self.take()
            d = int(self.take())
            if d == 0:
                raise ParseError("zero denominator")
            return QQ(sign * n, d)
        return QQ(sign * n)

    def term(self, sign):
        t = self.peek()
        if t is not None and t.isdigit():
            c = self.rational(sign)
            self.take("*")
            return self.word(), c
        return self.word(), QQ(sign)

    def poly(self):
        if self.toks == ["0"]:
            return MultiPoly.zero()
        acc = {}
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        while True:
            w, c = self.term(sign)
            nc = acc.get(w, 0) + c
            if nc:
                acc[w] = nc
            elif w in acc:
                del acc[w]
            t = self.peek()
            if t is None:
                break
            if t == "+":
                sign = 1
            elif t == "-":
                sign = -1
            else:
                raise ParseError(f"expected '+' or '-', got {t!r}")
            self.take()
        return MultiPoly(acc)


def parse_poly(s: str) -> MultiPoly:
    p = _Parser(_tokenize(s))
    out = p.poly()
    return out


def parse_word(s: str, allow_hole=False):
    p = _Parser(_tokenize(s), allow_hole=allow_hole)
    w = p.word()
    if p.peek() is not None:
        raise ParseError(f"trailing input after word: {p.peek()!r}")
    return w


def format_poly(p: MultiPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for idx, (w, c) in enumerate(p.items()):
        c = QQ(c)
        mag = c if c > 0 else -c
        coeff = "" if mag == 1 else f"{qq_str(mag)}*"
        body = f"{coeff}{format_word(w)}"
        if idx == 0:
            parts.append(body if c > 0 else f"-{qq_str(mag)}*{format_word(w)}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def parse_identity_file(text: str) -> list:
    """One polynomial per line; blank lines and '#' comments skipped."""
    out = []
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_poly(line))
        except ParseError as e:
            raise ParseError(f"line {ln}: {e}") from None
    return out


def poly_degree(p: MultiPoly) -> int:
    """Common degree of a homogeneous polynomial."""
    degs = {degree(w) for w in p.terms}
    if len(degs) != 1:
        raise ValueError("polynomial is not homogeneous")
    return degs.pop()

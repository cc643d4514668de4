"""Nonassociative monomials: binary trees with variable-labelled leaves.

A word is either a leaf, written as a plain positive int naming the
variable (1 means x1), or a pair ``(left, right)`` of words.  The int 0 is
reserved as the hole marker used by one-hole ideal contexts and is never a
real variable.

Words compare by the canonical order (degree, then the parenthesized
serialization), which is a strict total order and fixes matrix columns,
iteration order and certificate layout everywhere else.
"""

from functools import lru_cache
from itertools import product
from math import comb, factorial, prod

HOLE = 0

Word = int | tuple  # structural: tuple entries are Words again


def is_leaf(w) -> bool:
    return isinstance(w, int)


def degree(w) -> int:
    """Number of leaves."""
    if isinstance(w, int):
        return 1
    return degree(w[0]) + degree(w[1])


def leaves(w):
    """Leaf variables left-to-right."""
    if isinstance(w, int):
        yield w
    else:
        yield from leaves(w[0])
        yield from leaves(w[1])


def multidegree_of(w) -> dict:
    """Leaf-occurrence count per variable."""
    md = {}
    for v in leaves(w):
        md[v] = md.get(v, 0) + 1
    return md


def format_word(w) -> str:
    if isinstance(w, int):
        return "_" if w == HOLE else f"x{w}"
    return f"({format_word(w[0])}*{format_word(w[1])})"


def sort_key(w):
    return (degree(w), format_word(w))


def relabel(w, mapping):
    """Rebuild w with each leaf v replaced by mapping.get(v, v)."""
    if isinstance(w, int):
        return mapping.get(w, w)
    return (relabel(w[0], mapping), relabel(w[1], mapping))


def replace_hole(context, w):
    """Substitute w for the unique hole leaf of context."""
    if isinstance(context, int):
        return w if context == HOLE else context
    return (replace_hole(context[0], w), replace_hole(context[1], w))


def graft(w, images):
    """Replace each leaf v of w by the word images[v]."""
    if isinstance(w, int):
        return images[w]
    return (graft(w[0], images), graft(w[1], images))


class ShapeTable:
    """Interns bracketing shapes so words can be handled as (shape, leaves).

    Shape ids are local to a table; id entries are either "leaf" or a pair
    of child ids.
    """

    def __init__(self):
        self.ids = {}
        self.defs = []

    def _intern(self, key):
        sid = self.ids.get(key)
        if sid is None:
            sid = len(self.defs)
            self.ids[key] = sid
            self.defs.append(key)
        return sid

    def decompose(self, w):
        """(shape id, leaf tuple) of a word."""
        out = []
        sid = self._decomp(w, out)
        return sid, tuple(out)

    def _decomp(self, w, out):
        if isinstance(w, int):
            out.append(w)
            return self._intern("leaf")
        left = self._decomp(w[0], out)
        right = self._decomp(w[1], out)
        return self._intern((left, right))

    def rebuild(self, sid, leaf_iter):
        """Word with the given shape, consuming leaves left-to-right."""
        d = self.defs[sid]
        if d == "leaf":
            return next(leaf_iter)
        return (self.rebuild(d[0], leaf_iter), self.rebuild(d[1], leaf_iter))


def md_key(md) -> tuple:
    """Canonical hashable form of a multidegree mapping: sorted (var, exp) pairs."""
    return tuple(sorted((v, e) for v, e in md.items() if e))


def md_total(md) -> int:
    return sum(md.values())


def word_count(md) -> int:
    """(n! / prod d_i!) * Catalan(n-1) words of multidegree md, n = total degree."""
    n = md_total(md)
    if n == 0:
        return 0
    multinomial = factorial(n) // prod(factorial(e) for e in md.values())
    catalan = comb(2 * (n - 1), n - 1) // n
    return multinomial * catalan


@lru_cache(maxsize=None)
def _words_for(key: tuple) -> tuple:
    total = sum(e for _, e in key)
    if total == 1:
        return (key[0][0],)
    out = []
    vars_ = [v for v, _ in key]
    exps = [e for _, e in key]
    # left sub-multidegree ranges over all proper nonzero sub-vectors
    for left_exps in product(*(range(e + 1) for e in exps)):
        if not any(left_exps) or left_exps == tuple(exps):
            continue
        left = tuple((v, e) for v, e in zip(vars_, left_exps) if e)
        right = tuple((v, e - le) for v, e, le in zip(vars_, exps, left_exps) if e - le)
        for a in _words_for(left):
            for b in _words_for(right):
                out.append((a, b))
    out.sort(key=sort_key)
    return tuple(out)


def enumerate_words(md) -> list:
    """All words of the given multidegree, canonically ordered, no duplicates."""
    key = md_key(md)
    if not key:
        return []
    if any(e < 1 for _, e in key):
        raise ValueError("multidegree exponents must be positive")
    return list(_words_for(key))

"""Identity sets, T-ideal components, dimensions and membership certificates.

A variety stores fully linearized identities (valid over the rationals:
the multilinear consequences span every multihomogeneous component).  The
component of the T-ideal at a multidegree is spanned by the identities
with monomials substituted for their variables, embedded in a one-hole
monomial context; ComponentSpace streams that enumeration into an echelon
accumulator, stopping early when a membership target is reached or the
ambient space saturates.
"""

from dataclasses import dataclass
from itertools import product

from .config import DEFAULT_CONFIG, ResourceLimitError
from .linalg import EchelonAccumulator
from .poly import (MultiPoly, associator, commutator, format_poly, multiply,
                   parse_poly, parse_word)
from .rationals import QQ, qq_str
from .symmetrize import linearize
from .words import (HOLE, enumerate_words, format_word, graft, md_key,
                    replace_hole, word_count)


@dataclass(frozen=True)
class Variety:
    """A named set of multilinear identities; each uses variables x1..xk."""

    name: str
    identities: tuple

    def __post_init__(self):
        for f in self.identities:
            if not f.is_multilinear():
                raise ValueError("variety identities must be multilinear")

    def fingerprint(self):
        return (self.name, tuple(format_poly(f) for f in self.identities))


def _x(i):
    return MultiPoly.variable(i)


def builtin_variety(name: str, identity_polys=None) -> Variety:
    """Named identity sets: assoc, alt, flex, ncj_cor1, free, custom.

    custom takes a list of multihomogeneous polynomials (see
    parse_identity_file) and linearizes them.
    """
    x1, x2, x3 = _x(1), _x(2), _x(3)
    if name == "assoc":
        return Variety("assoc", (associator(x1, x2, x3),))
    if name == "alt":
        return Variety("alt", (
            associator(x1, x2, x3) + associator(x1, x3, x2),
            associator(x1, x2, x3) + associator(x2, x1, x3),
        ))
    if name == "flex":
        return Variety("flex", (associator(x1, x2, x3) + associator(x3, x2, x1),))
    if name == "ncj_cor1":
        flex = associator(x1, x2, x3) + associator(x3, x2, x1)
        ncj = linearize(associator(multiply(x1, x1), x2, x1))
        cor1 = linearize(associator(commutator(x1, x2), x3, x3))
        return Variety("ncj_cor1", (flex, ncj, cor1))
    if name == "free":
        return Variety("free", ())
    if name == "custom":
        if identity_polys is None:
            raise ValueError("custom variety needs identity polynomials")
        ids = []
        for p in identity_polys:
            if p.is_zero():
                continue
            if len(p.multidegrees()) != 1:
                raise ValueError(
                    f"custom identity is not multihomogeneous: {format_poly(p)}")
            ids.append(linearize(p))
        return Variety("custom", tuple(ids))
    raise ValueError(f"unknown variety {name!r}")


@dataclass(frozen=True)
class GenDescriptor:
    """One consequence generator: identity, slot monomials, one-hole context."""

    identity_index: int
    substitution: tuple  # word for identity variable i+1 at position i
    context: object      # word with exactly one HOLE leaf; HOLE alone = no context

    def to_json(self, variety: Variety) -> dict:
        return {
            "identity_index": self.identity_index,
            "identity": format_poly(variety.identities[self.identity_index]),
            "substitution": {f"x{i + 1}": format_word(w)
                             for i, w in enumerate(self.substitution)},
            "context": format_word(self.context),
        }

    @staticmethod
    def from_json(doc: dict) -> "GenDescriptor":
        subs = doc["substitution"]
        words = tuple(parse_word(subs[f"x{i + 1}"]) for i in range(len(subs)))
        return GenDescriptor(doc["identity_index"], words,
                             parse_word(doc["context"], allow_hole=True))


def expand_descriptor(variety: Variety, desc: GenDescriptor) -> MultiPoly:
    """Rebuild the generator polynomial; shares no code with the solver."""
    f = variety.identities[desc.identity_index]
    images = {i + 1: w for i, w in enumerate(desc.substitution)}
    acc = {}
    for w, c in f.terms.items():
        w2 = replace_hole(desc.context, graft(w, images))
        nc = acc.get(w2, 0) + c
        if nc:
            acc[w2] = nc
        elif w2 in acc:
            del acc[w2]
    return MultiPoly(acc)


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def _splits(d: dict, k: int):
    """(context multidegree, k nonzero slot multidegrees) summing to d."""
    vars_ = sorted(d)
    per_var = [list(_compositions(d[v], k + 1)) for v in vars_]
    for combo in product(*per_var):
        slots = []
        ok = True
        for b in range(1, k + 1):
            md = {v: combo[i][b] for i, v in enumerate(vars_) if combo[i][b]}
            if not md:
                ok = False
                break
            slots.append(md)
        if not ok:
            continue
        ctx = {v: combo[i][0] for i, v in enumerate(vars_) if combo[i][0]}
        yield ctx, slots


def consequence_generators(variety: Variety, d: dict):
    """Stream (polynomial, descriptor) pairs spanning the T-ideal component.

    Deterministic order, no duplicate descriptors.
    """
    d = {v: e for v, e in d.items() if e}
    for idx, f in enumerate(variety.identities):
        k = len(f.variables())
        if sum(d.values()) < k:
            continue
        for ctx_md, slot_mds in _splits(d, k):
            contexts = enumerate_words({**ctx_md, HOLE: 1})
            slot_words = [enumerate_words(md) for md in slot_mds]
            for ctx in contexts:
                for subs in product(*slot_words):
                    desc = GenDescriptor(idx, subs, ctx)
                    yield expand_descriptor(variety, desc), desc


@dataclass
class MembershipCertificate:
    """Exact witness: target = sum of coefficient * expanded descriptor."""

    target: MultiPoly
    variety_name: str
    multidegree: dict
    entries: list  # (GenDescriptor, coefficient)

    def to_json(self, variety: Variety) -> dict:
        return {
            "target": format_poly(self.target),
            "variety": self.variety_name,
            "multidegree": {f"x{v}": e for v, e in sorted(self.multidegree.items())},
            "generators": [
                {**desc.to_json(variety), "coefficient": qq_str(c)}
                for desc, c in self.entries
            ],
        }

    @staticmethod
    def from_json(doc: dict) -> "MembershipCertificate":
        entries = [(GenDescriptor.from_json(g), QQ(g["coefficient"]))
                   for g in doc["generators"]]
        md = {int(k[1:]): v for k, v in doc["multidegree"].items()}
        return MembershipCertificate(parse_poly(doc["target"]), doc["variety"], md, entries)

    def recheck(self, variety: Variety) -> bool:
        """Re-expand without the solver and compare exactly."""
        total = MultiPoly.zero()
        for desc, c in self.entries:
            total = total + expand_descriptor(variety, desc).scale(c)
        return total == self.target


class ComponentSpace:
    """Echelon of one multihomogeneous T-ideal component, built incrementally."""

    def __init__(self, variety: Variety, multidegree: dict, config=DEFAULT_CONFIG,
                 track_provenance: bool = True):
        self.variety = variety
        self.multidegree = {v: e for v, e in multidegree.items() if e}
        self.config = config
        n = word_count(self.multidegree)
        if n > config.max_ambient_dimension:
            raise ResourceLimitError("max_ambient_dimension", n,
                                     config.max_ambient_dimension)
        self.ambient = enumerate_words(self.multidegree)
        self.index = {w: i for i, w in enumerate(self.ambient)}
        self.acc = EchelonAccumulator(len(self.ambient), track_provenance)
        self._stream = consequence_generators(variety, self.multidegree)
        self._descriptors = {}  # insertion id -> GenDescriptor
        self._seen_vectors = set()  # raw vectors already offered (identical
        # expansions of distinct descriptors carry no new information)
        self._streamed = 0
        self.exhausted = False

    def vec(self, p: MultiPoly) -> dict:
        out = {}
        for w, c in p.terms.items():
            i = self.index.get(w)
            if i is None:
                raise ValueError(
                    f"word {format_word(w)} is outside multidegree "
                    f"{self.multidegree}")
            out[i] = c
        return out

    def word_at(self, col: int):
        return self.ambient[col]

    def _insert_next(self) -> bool:
        """Insert one generator; returns False when the stream is exhausted."""
        nxt = next(self._stream, None)
        if nxt is None:
            self.exhausted = True
            return False
        self._streamed += 1
        if self._streamed > self.config.max_generators:
            raise ResourceLimitError("max_generators", self._streamed,
                                     self.config.max_generators)
        poly, desc = nxt
        vec = self.vec(poly)
        key = frozenset(vec.items())
        if key in self._seen_vectors:
            return True
        self._seen_vectors.add(key)
        if self.acc.insert_reduce(vec):
            self._descriptors[self.acc.n_inserted - 1] = desc
        return True

    def saturate(self):
        """Consume the whole generator stream (early exit on full rank)."""
        while not self.exhausted and self.acc.rank < len(self.ambient):
            if not self._insert_next():
                break
        # at full rank the remaining stream cannot change any answer
        if self.acc.rank >= len(self.ambient):
            self.exhausted = True
        return self

    def dimension(self) -> int:
        """dim of the component of the relatively free algebra."""
        self.saturate()
        return len(self.ambient) - self.acc.rank

    def residual_of(self, p: MultiPoly) -> dict:
        return self.acc.residual(self.vec(p))

    def membership(self, p: MultiPoly):
        """(member, certificate, witness_word): streams generators lazily and
        stops as soon as the target falls into the accumulated span."""
        vec = self.vec(p)
        residual = self.acc.residual(vec)
        while residual and not self.exhausted:
            before = self.acc.rank
            if not self._insert_next():
                break
            if self.acc.rank > before and self.acc.last_pivot in residual:
                self.acc.rereduce(residual)
        if residual:
            return False, None, self.ambient[min(residual)]
        coeffs, _ = self.acc.express_in_span(vec)
        entries = [(self._descriptors[i], c) for i, c in sorted(coeffs.items())]
        cert = MembershipCertificate(p, self.variety.name, self.multidegree, entries)
        return True, cert, None

    def express(self, p: MultiPoly):
        """Certificate entries for p over the generators inserted so far."""
        coeffs, witness = self.acc.express_in_span(self.vec(p))
        if coeffs is None:
            return None, self.ambient[witness]
        entries = [(self._descriptors[i], c) for i, c in sorted(coeffs.items())]
        return MembershipCertificate(p, self.variety.name, self.multidegree,
                                     entries), None


_SPACE_CACHE = {}


def component_space(variety: Variety, multidegree: dict, config=DEFAULT_CONFIG,
                    track_provenance: bool = True) -> ComponentSpace:
    """Session cache: membership, dimension and decomposition checks at the
    same component share one echelon."""
    key = (variety.fingerprint(), md_key(multidegree),
           config.max_ambient_dimension, config.max_generators, track_provenance)
    space = _SPACE_CACHE.get(key)
    if space is None:
        space = ComponentSpace(variety, multidegree, config, track_provenance)
        _SPACE_CACHE[key] = space
    return space


def clear_space_cache():
    _SPACE_CACHE.clear()


def component_dimension(variety: Variety, multidegree: dict,
                        config=DEFAULT_CONFIG) -> int:
    return component_space(variety, multidegree, config).dimension()


@dataclass
class MembershipResult:
    member: bool
    certificates: list  # one MembershipCertificate per multidegree component
    witness: object     # leading word of a failing component, else None


def is_member(p: MultiPoly, variety: Variety, config=DEFAULT_CONFIG) -> MembershipResult:
    """T-ideal membership; non-multihomogeneous input is split by multidegree
    and is a member iff every component is."""
    if p.is_zero():
        return MembershipResult(True, [], None)
    certs = []
    for md, comp in sorted(p.homogeneous_components().items()):
        space = component_space(variety, dict(md), config)
        ok, cert, witness = space.membership(comp)
        if not ok:
            return MembershipResult(False, [], witness)
        certs.append(cert)
    return MembershipResult(True, certs, None)

"""The recursive alternating commutator family f_m, super-bracket words in
one odd generator, the base catalogue with its degree bookkeeping, the
generator-count bound, and the two-parameter skew decomposition solver.

f_1(x1) = x1, f_2(x1, x2) = [x1, x2], and

    f_{m+1}(x1..x_{m+1}) =
        sum over i < j of (-1)^(i+j-1) f_m([xi, xj], x1..^xi..^xj..x_{m+1})

where ^xk omits the argument.  All coefficients are integers.

Super-bracket convention (parities: |a| = degree mod 2, generator odd):

    [a, b]_s  = ab - (-1)^(|a||b|) ba        super-commutator
    a circ_s b = ab + (-1)^(|a||b|) ba        super-Jordan product

so x^[2] = 2 x*x is nonzero while [t, t]_s = 0.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb

from .config import DEFAULT_CONFIG
from .linalg import EchelonAccumulator
from .poly import MultiPoly, commutator, multiply, substitute
from .rationals import QQ
from .symmetrize import as_one_variable, permutation_sign, skew
from .variety import builtin_variety, component_space
from .words import leaves


@lru_cache(maxsize=None)
def fm(m: int) -> MultiPoly:
    """The degree-m alternating polynomial of the recursion, in x1..xm."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return MultiPoly.variable(1)
    prev = fm(m - 1)
    acc = MultiPoly.zero()
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            sign = 1 if (i + j) % 2 else -1  # (-1)^(i+j-1)
            rest = [k for k in range(1, m + 1) if k != i and k != j]
            assignment = {1: commutator(MultiPoly.variable(i), MultiPoly.variable(j))}
            for slot, var in enumerate(rest, start=2):
                assignment[slot] = MultiPoly.variable(var)
            term = substitute(prev, assignment)
            acc = acc + (term.scale(sign) if sign < 0 else term)
    return acc


# -- one-odd-generator super-bracket words -----------------------------------


@dataclass(frozen=True)
class SuperWord:
    """A one-variable element with its parity grading (degree mod 2)."""

    poly: MultiPoly
    degree: int

    def __post_init__(self):
        if not self.poly.is_zero():
            _, deg = as_one_variable(self.poly)
            if deg != self.degree:
                raise ValueError("declared degree does not match the element")

    @property
    def parity(self) -> int:
        return self.degree % 2

    def __mul__(self, other: "SuperWord") -> "SuperWord":
        return SuperWord(multiply(self.poly, other.poly), self.degree + other.degree)


def odd_generator() -> SuperWord:
    return SuperWord(MultiPoly.variable(1), 1)


def super_commutator(a: SuperWord, b: SuperWord) -> SuperWord:
    sign = -1 if (a.parity and b.parity) else 1
    p = multiply(a.poly, b.poly) - multiply(b.poly, a.poly).scale(sign)
    return SuperWord(p, a.degree + b.degree)


def super_jordan(a: SuperWord, b: SuperWord) -> SuperWord:
    sign = -1 if (a.parity and b.parity) else 1
    p = multiply(a.poly, b.poly) + multiply(b.poly, a.poly).scale(sign)
    return SuperWord(p, a.degree + b.degree)


def super_product(kind: str, a: SuperWord, b: SuperWord) -> SuperWord:
    if kind == "commutator":
        return super_commutator(a, b)
    if kind == "jordan":
        return super_jordan(a, b)
    raise ValueError(f"unknown super product kind {kind!r}")


@lru_cache(maxsize=None)
def x_bracket(k: int) -> SuperWord:
    """Iterated bracket x^[k]: x^[1] = x, x^[k+1] = [x^[k], x]_s."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return odd_generator()
    return super_commutator(x_bracket(k - 1), odd_generator())


def t_element() -> SuperWord:
    """t = x^[2] = 2 x*x, the even square."""
    return x_bracket(2)


@lru_cache(maxsize=None)
def t_power(m: int) -> SuperWord:
    """Left-associated t^m, degree 2m (m >= 1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return t_element()
    return t_power(m - 1) * t_element()


def z_word(k: int) -> SuperWord:
    """z^[k] = [x^[k], t]_s, defined for k > 1."""
    if k < 2:
        raise ValueError("z words need k > 1")
    return super_commutator(x_bracket(k), t_element())


def u_word(k: int) -> SuperWord:
    """u^[k] = x^[k] circ_s x^[3], defined for k > 1."""
    if k < 2:
        raise ValueError("u words need k > 1")
    return super_jordan(x_bracket(k), x_bracket(3))


# -- the base catalogue -------------------------------------------------------


@dataclass(frozen=True)
class BaseDescriptor:
    """One element of the spanning catalogue of the one-generator superalgebra.

    Families and degrees:
      power    t^m x^s                degree 2m + s,            m + s >= 1
      bracket  t^m (x^[k+2] x^s)      degree 2m + k + 2 + s,    k >= 1
      u_family t^m (u^[4k+e] x^s)     degree 2m + 4k + e + 3 + s, k >= 1
      z_family t^m (z^[4k+e] x^s)     degree 2m + 4k + e + 2 + s, k >= 1
    with s, e in {0, 1}.
    """

    family: str
    m: int = 0
    sigma: int = 0
    k: int = 0
    eps: int = 0

    def __post_init__(self):
        if self.family not in ("power", "bracket", "u_family", "z_family"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.m < 0 or self.sigma not in (0, 1):
            raise ValueError("bad parameters")
        if self.family == "power":
            if self.m + self.sigma < 1:
                raise ValueError("power family needs m + sigma >= 1")
        else:
            if self.k < 1:
                raise ValueError("k must be >= 1")
        if self.family in ("u_family", "z_family") and self.eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")

    @property
    def degree(self) -> int:
        base = 2 * self.m + self.sigma
        if self.family == "power":
            return base
        if self.family == "bracket":
            return base + self.k + 2
        if self.family == "u_family":
            return base + 4 * self.k + self.eps + 3
        return base + 4 * self.k + self.eps + 2

    def label(self) -> str:
        head = "" if self.m == 0 else ("t" if self.m == 1 else f"t^{self.m}")
        if self.family == "power":
            tail = "x" if self.sigma else ""
        else:
            sym = {"bracket": "x", "u_family": "u", "z_family": "z"}[self.family]
            idx = self.k + 2 if self.family == "bracket" else 4 * self.k + self.eps
            inner = f"{sym}[{idx}]"
            tail = f"({inner}*x)" if self.sigma else inner
        if head and tail:
            return f"{head}*{tail}"
        return head or tail


def base_element(desc: BaseDescriptor) -> SuperWord:
    """Construct the catalogue element literally, products as printed."""
    if desc.family == "power":
        inner = odd_generator() if desc.sigma else None
    else:
        if desc.family == "bracket":
            core = x_bracket(desc.k + 2)
        elif desc.family == "u_family":
            core = u_word(4 * desc.k + desc.eps)
        else:
            core = z_word(4 * desc.k + desc.eps)
        inner = core * odd_generator() if desc.sigma else core
    if desc.m == 0:
        if inner is None:
            raise ValueError("empty element")
        return inner
    head = t_power(desc.m)
    return head * inner if inner is not None else head


def base_descriptors(degree: int) -> list:
    """All catalogue descriptors of the given degree, in a fixed order."""
    if degree < 1:
        return []
    out = []
    sigma = degree % 2
    m = (degree - sigma) // 2
    if m + sigma >= 1:
        out.append(BaseDescriptor("power", m=m, sigma=sigma))
    for sigma in (0, 1):
        for k in range(1, degree + 1):
            rem = degree - sigma - (k + 2)
            if rem >= 0 and rem % 2 == 0:
                out.append(BaseDescriptor("bracket", m=rem // 2, sigma=sigma, k=k))
    for family, offset in (("u_family", 3), ("z_family", 2)):
        for sigma in (0, 1):
            for k in range(1, degree + 1):
                for eps in (0, 1):
                    rem = degree - sigma - (4 * k + eps) - offset
                    if rem >= 0 and rem % 2 == 0:
                        out.append(BaseDescriptor(family, m=rem // 2, sigma=sigma,
                                                  k=k, eps=eps))
    return out


def basea_count(degree: int) -> int:
    """Number of catalogue descriptors of the given degree."""
    return len(base_descriptors(degree))


def n_bound(m: int) -> int:
    """N(m) = m + C(m,2) + C(m,3): every m-generated alternative algebra
    satisfies f_{n+1} = 0 for all n > 1 + N(m)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return m + comb(m, 2) + comb(m, 3)


# -- associative shadow -------------------------------------------------------


def associative_projection(p: MultiPoly) -> dict:
    """Image under forgetting the bracketing: word -> tuple of its leaves."""
    acc = {}
    for w, c in p.terms.items():
        key = tuple(leaves(w))
        nc = acc.get(key, 0) + c
        if nc:
            acc[key] = nc
        elif key in acc:
            del acc[key]
    return acc


def standard_polynomial(n: int) -> dict:
    """S_n as an associative polynomial: sum of sgn(s) x_{s(1)}...x_{s(n)}."""
    return {perm: QQ(permutation_sign(perm))
            for perm in permutations(range(1, n + 1))}


# -- skew decomposition (two-parameter solve) ---------------------------------


@dataclass
class SkewDecomposition:
    m: int
    status: str            # "ok" | "no_solution"
    alpha: object = None
    beta: object = None    # None when the z term is absent or zero
    beta_free: bool = False
    certificate: object = None  # membership certificate for the residual
    residual: object = None     # fm - alpha*skew(x^[m]) - beta*skew(z^[m-2])


def solve_skew_decomposition(m: int, config=DEFAULT_CONFIG) -> SkewDecomposition:
    """Solve fm(m) = alpha * Skew(x^[m]) + beta * Skew(z^[m-2]) modulo the
    alternative T-ideal at the multilinear component of degree m.

    The z term participates only for m - 2 >= 2 (the bracket z^[k] is
    defined for k > 1); when it is absent or expands to zero the solve runs
    on the x^[m] term alone and beta is reported free.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    alt = builtin_variety("alt")
    md = {i: 1 for i in range(1, m + 1)}
    space = component_space(alt, md, config)
    space.saturate()

    s1 = skew(x_bracket(m).poly)
    s2 = skew(z_word(m - 2).poly) if m - 2 >= 2 else MultiPoly.zero()

    r1 = space.residual_of(s1)
    r2 = space.residual_of(s2) if s2 else {}
    rt = space.residual_of(fm(m))

    tiny = EchelonAccumulator(len(space.ambient), track_provenance=True)
    tiny.insert_reduce(r1)                       # insertion id 0
    z_independent = tiny.insert_reduce(r2) if r2 else False  # id 1
    coeffs, _ = tiny.express_in_span(rt)
    if coeffs is None:
        return SkewDecomposition(m, "no_solution")
    alpha = QQ(coeffs.get(0, 0))
    beta = QQ(coeffs.get(1, 0)) if z_independent else None
    beta_free = (m - 2 >= 2) and not z_independent

    combo = s1.scale(alpha)
    if beta is not None:
        combo = combo + s2.scale(beta)
    residual = fm(m) - combo
    certificate, witness = space.express(residual)
    if certificate is None:
        raise RuntimeError(
            f"residual escaped the saturated component at word {witness}")
    return SkewDecomposition(m, "ok", alpha, beta, beta_free, certificate, residual)

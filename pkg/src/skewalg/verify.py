"""Named, reproducible checks with pass/fail reports and certificates.

Each check ties one claim to a computation.  Verdicts are three-valued:
pass and fail are mathematical outcomes, resource_limit means a configured
bound stopped the computation before an answer existed; the two must never
be conflated.  Reports are plain data and serialize to JSON; membership
certificates are written as separate JSON files referenced by path.
"""

import json
import os
import random
import time
from dataclasses import dataclass, field
from itertools import chain, combinations, product
from math import factorial

from .config import DEFAULT_CONFIG, ResourceLimitError
from .family import (associative_projection, base_element, basea_count,
                     fm, solve_skew_decomposition, standard_polynomial,
                     x_bracket, BaseDescriptor)
from .linalg import EchelonAccumulator
from .poly import MultiPoly, commutator, jordan, multiply, substitute
from .rationals import qq_str
from .symmetrize import alternate, collapse, skew
from .variety import (builtin_variety, component_dimension, component_space,
                      consequence_generators, is_member)
from .words import format_word, leaves


@dataclass
class Report:
    check: str
    params: dict
    verdict: str  # pass | fail | resource_limit
    details: dict = field(default_factory=dict)
    certificates: list = field(default_factory=list)  # file paths
    elapsed_ms: int = 0

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "verdict": self.verdict,
            "details": self.details,
            "certificates": self.certificates,
            "elapsed_ms": self.elapsed_ms,
        }

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _variable(i):
    return MultiPoly.variable(i)


def _member_check(p, variety_name, config):
    """Shared body for the membership-style checks."""
    variety = builtin_variety(variety_name)
    result = is_member(p, variety, config)
    details = {"variety": variety_name, "member": result.member}
    if not result.member:
        details["witness"] = format_word(result.witness)
        return "fail", details, []
    for cert in result.certificates:
        if not cert.recheck(variety):
            details["error"] = "certificate failed re-expansion"
            return "fail", details, []
    details["generators_used"] = sum(len(c.entries) for c in result.certificates)
    return "pass", details, [(c, variety) for c in result.certificates]


def check_lemma1(params, config):
    m = params["m"]
    f = fm(m)
    bad = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if not collapse(f, i, j).is_zero():
                bad.append((i, j))
    details = {"m": m, "pairs_checked": m * (m - 1) // 2, "terms": len(f)}
    if bad:
        details["nonvanishing_pairs"] = bad
        return "fail", details, []
    return "pass", details, []


def check_eq1(params, config):
    x, y = _variable(1), _variable(2)
    p = commutator(multiply(x, x), y) - jordan(x, commutator(x, y))
    return _member_check(p, "flex", config)


def check_lemma2(params, config):
    m = params["m"]
    x = _variable(1)
    assignment = {1: multiply(x, x), 2: x}
    for slot in range(3, m + 1):
        assignment[slot] = _variable(slot - 1)
    p = substitute(fm(m), assignment)
    verdict, details, certs = _member_check(p, "flex", config)
    details["m"] = m
    return verdict, details, certs


def check_eq4(params, config):
    k = params["k"]
    f = fm(k + 1)
    x, y, z = _variable(1), _variable(2), _variable(3)
    extras = {slot: _variable(slot + 2) for slot in range(2, k + 1)}
    a = substitute(f, {1: jordan(x, y), **extras, k + 1: z})
    b = substitute(f, {1: x, **extras, k + 1: jordan(z, y)})
    c = substitute(f, {1: y, **extras, k + 1: jordan(z, x)})
    verdict, details, certs = _member_check(a - b - c, "flex", config)
    details["k"] = k
    return verdict, details, certs


def check_fm_nonzero(params, config):
    m = params["m"]
    alt = builtin_variety("alt")
    space = component_space(alt, {i: 1 for i in range(1, m + 1)}, config)
    space.saturate()
    residual = space.residual_of(fm(m))
    details = {
        "m": m,
        "ambient": len(space.ambient),
        "ideal_rank": space.acc.rank,
    }
    if residual:
        details["witness"] = format_word(space.word_at(min(residual)))
        return "pass", details, []
    details["error"] = "fm(m) fell into the alternative T-ideal"
    return "fail", details, []


def _bracketing_shapes(n: int):
    """All binary bracketings of x1..xn in left-to-right leaf order."""
    def build(lo: int, hi: int):
        if hi - lo == 1:
            return [lo]
        out = []
        for mid in range(lo + 1, hi):
            for left in build(lo, mid):
                for right in build(mid, hi):
                    out.append((left, right))
        return out

    return build(1, n + 1)


def check_skew_dim(params, config):
    d = params["d"]
    expected = basea_count(d)
    alt = builtin_variety("alt")
    space = component_space(alt, {i: 1 for i in range(1, d + 1)}, config)
    space.saturate()
    quotient_rank = EchelonAccumulator(len(space.ambient), track_provenance=False)
    for shape in _bracketing_shapes(d):
        image = alternate(MultiPoly.monomial(shape))
        quotient_rank.insert_reduce(space.residual_of(image))
    details = {
        "d": d,
        "ambient": len(space.ambient),
        "skew_dimension": quotient_rank.rank,
        "expected": expected,
    }
    verdict = "pass" if quotient_rank.rank == expected else "fail"
    return verdict, details, []


def _binary_words(max_degree: int):
    """Associative words in two letters, degrees 1..max_degree, as tuples."""
    out = []
    for n in range(1, max_degree + 1):
        out.extend(product((1, 2), repeat=n))
    return out


def _evaluate_associative(proj: dict, words: tuple) -> dict:
    """Evaluate a multilinear associative polynomial at associative words."""
    acc = {}
    for term, c in proj.items():
        image = tuple(chain.from_iterable(words[v - 1] for v in term))
        nc = acc.get(image, 0) + c
        if nc:
            acc[image] = nc
        elif image in acc:
            del acc[image]
    return acc


def _cor2_body(m: int, degree_bound: int, config):
    """Evaluate fm(m)'s associative image on m-subsets of two-letter words."""
    proj = associative_projection(fm(m))
    small = _binary_words(2)
    full_failures = sum(
        1 for subset in combinations(small, m)
        if _evaluate_associative(proj, subset)
    )
    pool = _binary_words(degree_bound)
    rng = random.Random(config.random_seed)
    sampled_failures = 0
    for _ in range(100):
        subset = tuple(sorted(rng.sample(range(len(pool)), m)))
        if _evaluate_associative(proj, tuple(pool[i] for i in subset)):
            sampled_failures += 1
    details = {
        "m": m,
        "degree_bound": degree_bound,
        "full_subsets": len(list(combinations(range(len(small)), m))),
        "full_nonzero": full_failures,
        "sampled_subsets": 100,
        "sampled_nonzero": sampled_failures,
        "seed": config.random_seed,
    }
    return full_failures, sampled_failures, details


def check_cor2_assoc(params, config):
    degree_bound = params["degree_bound"]
    full_bad, sampled_bad, details = _cor2_body(6, degree_bound, config)
    verdict = "pass" if full_bad == 0 and sampled_bad == 0 else "fail"
    return verdict, details, []


def check_cor2_assoc_probe(params, config):
    """Exploratory: outcome for fm(5) is reported, never asserted."""
    degree_bound = params["degree_bound"]
    full_bad, sampled_bad, details = _cor2_body(5, degree_bound, config)
    details["outcome"] = ("vanished on all sampled substitutions"
                          if full_bad == 0 and sampled_bad == 0
                          else "nonzero on some substitution")
    return "pass", details, []


def check_assoc_projection(params, config):
    d = params["d"]
    details = {"d": d}
    for k in range(3, d + 1):
        if associative_projection(x_bracket(k).poly):
            details["error"] = f"x[{k}] has a nonzero associative image"
            return "fail", details, []
    skew_max = min(d, 5)
    checked = []
    for m in range(0, skew_max // 2 + 1):
        for sigma in (0, 1):
            n = 2 * m + sigma
            if n < 1 or n > skew_max:
                continue
            element = base_element(BaseDescriptor("power", m=m, sigma=sigma))
            got = associative_projection(skew(element.poly))
            want = {w: (2 ** m) * c for w, c in standard_polynomial(n).items()}
            checked.append(f"t^{m}*x^{sigma}")
            if got != want:
                details["error"] = f"skew(t^{m} x^{sigma}) missed 2^{m} * S_{n}"
                return "fail", details, []
    details["bracket_images_zero_up_to"] = d
    details["standard_polynomials_checked"] = checked
    return "pass", details, []


def check_lemma3(params, config):
    m = params["m"]
    result = solve_skew_decomposition(m, config)
    details = {"m": m, "status": result.status}
    if result.status != "ok":
        return "fail", details, []
    details["alpha"] = qq_str(result.alpha)
    details["beta"] = qq_str(result.beta) if result.beta is not None else None
    details["beta_free"] = result.beta_free
    if not result.alpha:
        details["error"] = "alpha vanished"
        return "fail", details, []
    alt = builtin_variety("alt")
    if not result.certificate.recheck(alt):
        details["error"] = "residual certificate failed re-expansion"
        return "fail", details, []
    details["residual_generators"] = len(result.certificate.entries)
    return "pass", details, [(result.certificate, alt)]


def check_cor4_tiny(params, config):
    """Skew x^[4] under every substitution of one-variable monomials of
    degree <= 3, evaluated in the associative-and-commutative collapse."""
    s = skew(x_bracket(4).poly)
    failures = 0
    for exps in product((1, 2, 3), repeat=4):
        acc = {}
        for w, c in s.terms.items():
            e = sum(exps[v - 1] for v in leaves(w))
            nc = acc.get(e, 0) + c
            if nc:
                acc[e] = nc
            elif e in acc:
                del acc[e]
        if acc:
            failures += 1
    details = {"substitutions": 3 ** 4, "nonzero": failures}
    return ("pass" if failures == 0 else "fail"), details, []


def check_eq6(params, config):
    """Two-parameter solve: Skew x^[m] against fm(m) and the double-bracket
    sum over omitted pairs, modulo the alternative T-ideal."""
    m = params["m"]
    if m < 3:
        raise ValueError("eq6 needs m >= 3")
    alt = builtin_variety("alt")
    space = component_space(alt, {i: 1 for i in range(1, m + 1)}, config)
    space.saturate()

    bracket_sum = MultiPoly.zero()
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            rest = [k for k in range(1, m + 1) if k != i and k != j]
            inner = substitute(fm(m - 2),
                               {slot: _variable(v) for slot, v in enumerate(rest, start=1)})
            term = commutator(inner, commutator(_variable(i), _variable(j)))
            bracket_sum = bracket_sum + (term if (i + j) % 2 == 0 else term.scale(-1))

    target = space.residual_of(skew(x_bracket(m).poly))
    r1 = space.residual_of(fm(m))
    r2 = space.residual_of(bracket_sum)
    tiny = EchelonAccumulator(len(space.ambient), track_provenance=True)
    tiny.insert_reduce(r1)
    tiny.insert_reduce(r2)
    coeffs, _ = tiny.express_in_span(target)
    details = {"m": m}
    if coeffs is None:
        details["error"] = "no (lambda, nu) combination exists"
        return "fail", details, []
    lam = coeffs.get(0, 0)
    details["lambda"] = qq_str(lam)
    details["nu"] = qq_str(coeffs.get(1, 0))
    if not lam:
        details["error"] = "lambda vanished"
        return "fail", details, []
    return "pass", details, []


def check_engine_soundness(params, config):
    n_certs = params["n_certificates"]
    n_shuffles = params["n_shuffles"]
    n_sets = params["n_sets"]
    details = {}

    assoc = builtin_variety("assoc")
    dims = {}
    for n in range(1, 6):
        md = {i: 1 for i in range(1, n + 1)}
        dims[n] = component_dimension(assoc, md, config)
        if dims[n] != factorial(n):
            details["error"] = f"dim(assoc, multilinear {n}) = {dims[n]} != {n}!"
            return "fail", details, []
    details["assoc_multilinear_dims"] = dims

    alt = builtin_variety("alt")
    d_alt = component_dimension(alt, {1: 1, 2: 1, 3: 1}, config)
    details["alt_dim_111"] = d_alt
    if d_alt != 7:
        details["error"] = "dim(alt, (1,1,1)) != 7"
        return "fail", details, []

    rng = random.Random(config.random_seed)
    layouts = [
        ("alt", {1: 1, 2: 1, 3: 1}),
        ("flex", {1: 2, 2: 1}),
        ("flex", {1: 1, 2: 1, 3: 1, 4: 1}),
        ("alt", {1: 2, 2: 1, 3: 1}),
    ]
    pools = {}
    for vname, md in layouts:
        gens = [g for g, _ in consequence_generators(builtin_variety(vname), md)]
        pools[(vname, tuple(sorted(md.items())))] = gens
    rechecked = 0
    for _ in range(n_certs):
        vname, md = layouts[rng.randrange(len(layouts))]
        gens = pools[(vname, tuple(sorted(md.items())))]
        target = MultiPoly.zero()
        for _ in range(rng.randint(1, 4)):
            coeff = rng.randint(-3, 3)
            target = target + gens[rng.randrange(len(gens))].scale(coeff)
        result = is_member(target, builtin_variety(vname), config)
        if not result.member:
            details["error"] = f"generator combination not recognized in {vname}"
            return "fail", details, []
        for cert in result.certificates:
            if not cert.recheck(builtin_variety(vname)):
                details["error"] = "random certificate failed re-expansion"
                return "fail", details, []
        rechecked += 1
    details["certificates_rechecked"] = rechecked

    stable = 0
    for _ in range(n_sets):
        dim = rng.randint(5, 50)
        vecs = []
        for _ in range(rng.randint(3, 12)):
            vec = {rng.randrange(dim): rng.randint(-5, 5)
                   for _ in range(rng.randint(1, min(dim, 6)))}
            vecs.append({k: v for k, v in vec.items() if v})
        base_acc = EchelonAccumulator(dim, track_provenance=False)
        for v in vecs:
            base_acc.insert_reduce(v)
        for _ in range(n_shuffles):
            order = list(range(len(vecs)))
            rng.shuffle(order)
            acc = EchelonAccumulator(dim, track_provenance=False)
            for i in order:
                acc.insert_reduce(vecs[i])
            if acc.rank != base_acc.rank:
                details["error"] = "rank depended on insertion order"
                return "fail", details, []
        stable += 1
    details["shuffle_stable_sets"] = stable
    details["seed"] = config.random_seed
    return "pass", details, []


@dataclass(frozen=True)
class CheckDef:
    runner: object
    defaults: dict
    description: str


CHECKS = {
    "lemma1": CheckDef(check_lemma1, {"m": 5},
                       "collapse(fm(m), i, j) = 0 for every pair, free magma"),
    "eq1": CheckDef(check_eq1, {},
                    "[x^2,y] - x o [x,y] lies in the flexible T-ideal"),
    "lemma2": CheckDef(check_lemma2, {"m": 4},
                       "fm(m)(x^2, x, ...) lies in the flexible T-ideal"),
    "eq4": CheckDef(check_eq4, {"k": 2},
                    "the Jordan-shift linearization lies in the flexible T-ideal"),
    "fm_nonzero": CheckDef(check_fm_nonzero, {"m": 3},
                           "fm(m) stays outside the alternative T-ideal"),
    "skew_dim": CheckDef(check_skew_dim, {"d": 4},
                         "skew subspace dimension matches the catalogue count"),
    "cor2_assoc": CheckDef(check_cor2_assoc, {"degree_bound": 3},
                           "fm(6) vanishes under two-letter associative evaluation"),
    "cor2_assoc_probe": CheckDef(check_cor2_assoc_probe, {"degree_bound": 3},
                                 "exploratory: fm(5) under the same evaluation"),
    "assoc_projection": CheckDef(check_assoc_projection, {"d": 9},
                                 "bracket words project to 0; skew powers hit 2^m S_n"),
    "lemma3": CheckDef(check_lemma3, {"m": 4},
                       "fm(m) = alpha Skew x^[m] + beta Skew z^[m-2] mod alt"),
    "eq6": CheckDef(check_eq6, {"m": 4},
                    "Skew x^[m] decomposes over fm(m) and double brackets mod alt"),
    "cor4_tiny": CheckDef(check_cor4_tiny, {},
                          "Skew x^[4] dies under one-generator commutative evaluation"),
    "engine_soundness": CheckDef(check_engine_soundness,
                                 {"n_certificates": 200, "n_shuffles": 20, "n_sets": 10},
                                 "dimension table, certificate and shuffle properties"),
}


DESK_SUITE = (
    [("lemma1", {"m": m}) for m in range(3, 8)]
    + [("eq1", {})]
    + [("lemma2", {"m": m}) for m in (3, 4, 5)]
    + [("fm_nonzero", {"m": m}) for m in (3, 4, 5)]
    + [("skew_dim", {"d": d}) for d in range(1, 6)]
    + [("cor2_assoc", {"degree_bound": 3})]
    + [("assoc_projection", {"d": 9})]
    + [("lemma3", {"m": 4}), ("lemma3", {"m": 5})]
    + [("engine_soundness", {})]
)


def _write_certificates(check, params, cert_pairs, config):
    if not cert_pairs:
        return []
    os.makedirs(config.certificate_directory, exist_ok=True)
    tag = "_".join(f"{k}{v}" for k, v in sorted(params.items())) or "run"
    paths = []
    for i, (cert, variety) in enumerate(cert_pairs):
        path = os.path.join(config.certificate_directory,
                            f"{check}_{tag}_{i}.json")
        with open(path, "w") as fh:
            json.dump(cert.to_json(variety), fh, indent=1)
        paths.append(path)
    return paths


def verify(check: str, params=None, config=DEFAULT_CONFIG) -> Report:
    """Run one named check; resource limits surface as their own verdict."""
    if check not in CHECKS:
        raise ValueError(f"unknown check {check!r}")
    cdef = CHECKS[check]
    merged = dict(cdef.defaults)
    if params:
        unknown = set(params) - set(cdef.defaults)
        if unknown:
            raise ValueError(f"unknown parameters for {check}: {sorted(unknown)}")
        merged.update(params)
    t0 = time.perf_counter()
    try:
        verdict, details, cert_pairs = cdef.runner(merged, config)
        paths = _write_certificates(check, merged, cert_pairs, config)
    except ResourceLimitError as e:
        verdict = "resource_limit"
        details = {"limit": e.limit_name, "needed": e.needed, "bound": e.limit}
        paths = []
    elapsed = int((time.perf_counter() - t0) * 1000)
    return Report(check, merged, verdict, details, paths, elapsed)


def run_desk_suite(config=DEFAULT_CONFIG):
    """The full desk-scale battery; returns the report list."""
    return [verify(name, params, config) for name, params in DESK_SUITE]

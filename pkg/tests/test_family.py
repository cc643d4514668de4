import random

import pytest

from oracles import dense_express
from skewalg.family import (BaseDescriptor, SuperWord, associative_projection,
                            base_descriptors, base_element, basea_count, fm,
                            n_bound, odd_generator, solve_skew_decomposition,
                            standard_polynomial, super_commutator,
                            super_jordan, super_product, t_element, t_power,
                            u_word, x_bracket, z_word)
from skewalg.poly import MultiPoly, commutator, parse_poly
from skewalg.rationals import QQ
from skewalg.symmetrize import collapse, skew
from skewalg.variety import ComponentSpace, builtin_variety, consequence_generators


def test_fm_base_cases():
    assert fm(1) == parse_poly("x1")
    assert fm(2) == parse_poly("(x1*x2) - (x2*x1)")


def test_fm3_hand_expansion():
    x1, x2, x3 = (MultiPoly.variable(i) for i in (1, 2, 3))
    expected = (commutator(commutator(x1, x2), x3)
                - commutator(commutator(x1, x3), x2)
                + commutator(commutator(x2, x3), x1))
    assert fm(3) == expected


@pytest.mark.parametrize("m", range(1, 7))
def test_fm_multilinear_integer(m):
    f = fm(m)
    assert f.is_multilinear()
    assert f.variables() == set(range(1, m + 1))
    for c in f.terms.values():
        assert QQ(c).denominator == 1


def test_fm_term_counts_frozen():
    assert {m: len(fm(m).terms) for m in range(1, 7)} == {
        1: 1, 2: 2, 3: 12, 4: 96, 5: 1440, 6: 20160}


@pytest.mark.parametrize("m", range(2, 7))
def test_fm_skew_symmetric(m):
    f = fm(m)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            assert collapse(f, i, j).is_zero()


def test_super_commutator_of_generator():
    x = odd_generator()
    t = super_commutator(x, x)
    assert t.poly == parse_poly("2*(x1*x1)")
    assert t.parity == 0
    assert super_commutator(t, t).poly.is_zero()


def test_super_jordan_parity_and_symmetry():
    x = odd_generator()
    t = t_element()
    xt = super_jordan(x, t)
    assert xt.parity == 1
    assert xt.poly == parse_poly("2*(x1*(x1*x1)) + 2*((x1*x1)*x1)")
    # even-odd super products are plain products of signs +1
    assert super_jordan(t, x).poly == xt.poly


def test_super_antisymmetry_rule():
    rng = random.Random(5)
    from skewalg.words import enumerate_words
    for _ in range(10):
        da, db = rng.randint(1, 3), rng.randint(1, 3)
        a = SuperWord(MultiPoly.monomial(rng.choice(enumerate_words({1: da}))), da)
        b = SuperWord(MultiPoly.monomial(rng.choice(enumerate_words({1: db}))), db)
        sign = -1 if (da % 2 and db % 2) else 1
        assert super_commutator(a, b).poly == super_commutator(b, a).poly.scale(-sign)
        assert super_jordan(a, b).poly == super_jordan(b, a).poly.scale(sign)


def test_super_product_dispatch():
    x = odd_generator()
    assert super_product("commutator", x, x).poly == parse_poly("2*(x1*x1)")
    assert super_product("jordan", x, x).poly.is_zero()
    with pytest.raises(ValueError):
        super_product("plain", x, x)


def test_superword_validation():
    with pytest.raises(ValueError):
        SuperWord(parse_poly("(x1*x2)"), 2)
    with pytest.raises(ValueError):
        SuperWord(parse_poly("(x1*x1)"), 3)


def test_x_bracket_values():
    assert x_bracket(1).poly == parse_poly("x1")
    assert x_bracket(2).poly == parse_poly("2*(x1*x1)")
    assert x_bracket(3).poly == parse_poly("2*((x1*x1)*x1) - 2*(x1*(x1*x1))")
    assert x_bracket(4).parity == 0
    assert t_element().poly == x_bracket(2).poly


def test_z_and_u_words():
    t = t_element()
    z4 = z_word(4)
    assert z4.degree == 6
    direct = super_commutator(x_bracket(4), t)
    assert z4.poly == direct.poly
    u4 = u_word(4)
    assert u4.degree == 7
    with pytest.raises(ValueError):
        z_word(1)
    with pytest.raises(ValueError):
        u_word(0)


def test_base_element_examples():
    t = base_element(BaseDescriptor("power", m=1))
    assert t.poly == parse_poly("2*(x1*x1)")
    x3 = base_element(BaseDescriptor("bracket", m=0, k=1))
    assert x3.poly == x_bracket(3).poly
    z_smallest = base_element(BaseDescriptor("z_family", m=0, k=1, eps=0))
    assert z_smallest.poly == z_word(4).poly
    assert base_element(BaseDescriptor("power", m=0, sigma=1)).poly == parse_poly("x1")
    # degrees agree with the declared formula
    for d in range(1, 9):
        for desc in base_descriptors(d):
            assert desc.degree == d
            assert base_element(desc).degree == d


def test_base_descriptor_validation():
    with pytest.raises(ValueError):
        BaseDescriptor("power", m=0, sigma=0)
    with pytest.raises(ValueError):
        BaseDescriptor("bracket", m=1, k=0)
    with pytest.raises(ValueError):
        BaseDescriptor("tower", m=1)


def test_basea_counts():
    assert [basea_count(d) for d in range(1, 7)] == [1, 1, 2, 3, 4, 6]
    assert basea_count(0) == 0


def test_base_labels():
    labels = {d.label() for d in base_descriptors(5)}
    assert labels == {"t^2*x", "t*x[3]", "x[5]", "(x[4]*x)"}
    assert BaseDescriptor("bracket", m=2, k=3, sigma=1).label() == "t^2*(x[5]*x)"


def test_n_bound():
    assert n_bound(0) == 0
    assert n_bound(2) == 3
    assert n_bound(3) == 7
    with pytest.raises(ValueError):
        n_bound(-1)


def test_associative_projection_brackets_vanish():
    for k in range(3, 10):
        assert associative_projection(x_bracket(k).poly) == {}
    for k in (4, 5, 6):  # z/u images checked through total degree 9
        assert associative_projection(z_word(k).poly) == {}
        assert associative_projection(u_word(k).poly) == {}


def test_associative_projection_powers():
    for m in (1, 2, 3):
        for sigma in (0, 1):
            el = base_element(BaseDescriptor("power", m=m, sigma=sigma))
            proj = associative_projection(el.poly)
            n = 2 * m + sigma
            assert proj == {(1,) * n: QQ(2) ** m}


def test_skew_powers_project_to_standard_polynomial():
    for m, sigma in [(0, 1), (1, 0), (1, 1), (2, 0)]:
        n = 2 * m + sigma
        el = base_element(BaseDescriptor("power", m=m, sigma=sigma))
        got = associative_projection(skew(el.poly))
        want = {w: (QQ(2) ** m) * c for w, c in standard_polynomial(n).items()}
        assert got == want


def test_standard_polynomial_small():
    assert standard_polynomial(1) == {(1,): QQ(1)}
    assert standard_polynomial(2) == {(1, 2): QQ(1), (2, 1): QQ(-1)}
    s3 = standard_polynomial(3)
    assert len(s3) == 6 and s3[(3, 2, 1)] == QQ(-1)


def test_solve_skew_decomposition_small(config):
    for m, expect_free in [(2, False), (3, False), (4, True)]:
        r = solve_skew_decomposition(m, config)
        assert r.status == "ok"
        assert r.alpha == QQ(1, 2)
        assert r.beta is None
        assert r.beta_free is expect_free
        assert r.residual.is_zero()
        assert r.certificate.entries == []


def test_alpha4_against_dense_oracle(config):
    # independent route: dense solve of fm(4) over {Skew x^[4]} + alt generators
    alt = builtin_variety("alt")
    md = {i: 1 for i in range(1, 5)}
    space = ComponentSpace(alt, md, config)
    rows = [space.vec(skew(x_bracket(4).poly))]
    rows += [space.vec(p) for p, _ in consequence_generators(alt, md)]
    coeffs = dense_express(rows, space.vec(fm(4)), len(space.ambient))
    assert coeffs is not None
    assert coeffs.get(0) == QQ(1, 2)


def test_t_power_is_left_associated():
    assert t_power(2).poly == parse_poly("4*((x1*x1)*(x1*x1))")
    assert t_power(3).degree == 6


def test_solver_rejects_bad_m():
    with pytest.raises(ValueError):
        solve_skew_decomposition(0)

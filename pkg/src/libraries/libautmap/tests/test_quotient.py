import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from libautmap.endo.endo import Endo
from libautmap.errors import DimensionMismatch, FieldTooLarge, InputError, NotSAut
from libautmap.poly.multipoly import MultiPoly
from libautmap.poly.parser import parse_poly
from libautmap.quotient import (
    VClass,
    class_add,
    from_m_basis,
    independence_check,
    rho,
    to_m_basis,
    v_class,
    v_membership,
)
from libautmap.ring.fields import parse_field
from libautmap.ring.paramring import ParamRing
from libautmap.tame.generators import linear
from libautmap.tame.randomword import random_scalar, random_word

GF2 = parse_field("GF(2)")
GF3 = parse_field("GF(3)")


def univariate(text, field):
    return parse_poly(text, ParamRing(field), 1)


def test_m_basis_expansion():
    coords = to_m_basis(univariate("x1^3", GF2))
    # x^3 = (x + 1) R + x with R = x^2 + x
    assert set(coords) == {(1, 0), (0, 1), (1, 1)}
    assert all(c == 1 for c in coords.values())
    assert from_m_basis(GF2, coords) == univariate("x1^3", GF2)

    assert to_m_basis(univariate("x1^3 - x1", GF3)) == {(0, 1): 1}
    assert from_m_basis(GF3, {(0, 2): 1}) == univariate("(x1^3 - x1)^2", GF3)


def test_m_basis_errors():
    with pytest.raises(InputError):
        from_m_basis(GF2, {(2, 0): 1})
    with pytest.raises(InputError):
        to_m_basis(parse_poly("x1*x2", ParamRing(GF2), 2))


def test_membership_over_gf2():
    assert v_membership(univariate("x1^2 + x1", GF2)).member()
    assert v_membership(univariate("1", GF2)).member()
    result = v_membership(univariate("x1", GF2))
    assert not result.member()
    assert result.remainder().coordinates() == {(1, 0): 1}


@pytest.mark.parametrize("q", [2, 3, 4])
def test_constants_lie_in_v(q):
    field = parse_field(f"GF({q:d})")
    assert v_membership(univariate("1", field)).member()
    assert v_membership(univariate("x1", field)).member() == (q > 2)


def test_membership_dict():
    data = v_membership(univariate("x1^2 + x1", GF2), bound=2).to_dict()
    assert data["polynomial"] == "x1^2 + x1"
    assert data["field"] == "GF(2)"
    assert data["stratum_bound"] == 2
    assert data["member"]
    assert data["remainder"]["zero"]
    assert data["combination"]
    assert {"i", "j", "a", "b", "coefficient"} <= set(data["combination"][0])


def test_membership_bound():
    with pytest.raises(InputError):
        v_membership(univariate("x1^4", GF2), bound=0)
    assert v_membership(univariate("x1^4", GF2), bound=5).to_dict()["stratum_bound"] == 5


def test_class_arithmetic():
    x = v_class(univariate("x1", GF2))
    assert not x.is_zero()
    assert (x + x).is_zero()
    assert v_class(univariate("x1", GF2), modulo_linear=True).is_zero()
    assert class_add(x, VClass.zero(GF2)) == x
    with pytest.raises(InputError):
        class_add(x, VClass.zero(GF3))
    with pytest.raises(InputError):
        class_add(x, VClass.zero(GF2, modulo_linear=True))


def test_class_dict():
    data = v_class(univariate("x1", GF2)).to_dict()
    assert data == {
        "field": "GF(2)",
        "representative": "x1",
        "coordinates": [{"i": 1, "j": 0, "coefficient": "1"}],
        "zero": False,
        "modulo_linear": False,
    }


def test_quotient_field_cap(monkeypatch):
    monkeypatch.setenv("AUTMAP_MAX_QUOTIENT_FIELD", "4")
    with pytest.raises(FieldTooLarge):
        v_class(univariate("x1", parse_field("GF(5)")))
    assert v_class(univariate("x1", parse_field("GF(4)"))).is_zero()


def test_quotient_needs_finite_field():
    with pytest.raises(InputError):
        v_class(univariate("x1", parse_field("QQ")))


def test_independence():
    assert independence_check(2, 3)
    assert independence_check(3, 2)
    assert independence_check(3, 3)
    assert independence_check(4, 0)
    with pytest.raises(InputError):
        independence_check(2, 6)


def test_rho_of_cubic_shear(endo):
    cls = rho(endo("(x1, x2 + x1^3)", "GF(2)"))
    assert not cls.is_zero()
    assert cls == v_class(univariate("x1^3", GF2))


def test_rho_of_affine_maps(endo):
    assert rho(endo("(x1 + 1, x2 + 2)", "GF(3)")).is_zero()
    odd = rho(endo("(x1 + x2, x2)", "GF(2)"))
    assert odd.coordinates() == {(1, 0): 1}
    assert rho(endo("(x1 + x2, x2)", "GF(2)"), modulo_linear=True).is_zero()


def test_rho_vanishes_on_sl2():
    ring = ParamRing(GF3)
    for a, b, c, d in itertools.product(range(3), repeat=4):
        if (a * d - b * c) % 3 != 1:
            continue
        assert rho(linear(ring, 2, [[a, b], [c, d]])).is_zero()


def test_rho_errors(endo):
    with pytest.raises(NotSAut):
        rho(endo("(2*x1, x2)", "GF(3)"))
    with pytest.raises(DimensionMismatch):
        rho(endo("(x1, x2, x3)", "GF(3)"))


def shear(field, coefficients):
    """
    Returns e_s = (x1, x2 + s(x1)) and s as a polynomial in x1 alone
    """
    ring = ParamRing(field)
    s_plane = MultiPoly.zero(ring, 2)
    s_line = MultiPoly.zero(ring, 1)
    for k, c in enumerate(coefficients):
        c = field.normalize(c)
        s_plane = s_plane + MultiPoly.monomial(ring, 2, (0, k, 0), c)
        s_line = s_line + MultiPoly.monomial(ring, 1, (0, k), c)
    x1, x2 = MultiPoly.variable(ring, 2, 1), MultiPoly.variable(ring, 2, 2)
    return Endo([x1, x2 + s_plane]), s_line


@pytest.mark.parametrize("tag", ["GF(2)", "GF(3)", "GF(4)"])
def test_rho_of_random_shears(tag):
    field = parse_field(tag)
    rng = np.random.default_rng(17)
    for _ in range(50):
        coefficients = [random_scalar(field, rng) for _ in range(int(rng.integers(1, 10)))]
        e_s, s = shear(field, coefficients)
        assert rho(e_s) == v_class(s)


@pytest.mark.parametrize("tag", ["GF(2)", "GF(3)"])
def test_shears_reach_every_basis_class(tag):
    field = parse_field(tag)
    for k in range(9):
        e_s, s = shear(field, [0] * k + [1])
        assert rho(e_s) == v_class(s)
        assert rho(e_s).is_zero() == v_membership(s).member()


@pytest.mark.parametrize("tag", ["GF(2)", "GF(3)", "GF(4)"])
def test_membership_is_stable_in_the_bound(tag):
    field = parse_field(tag)
    rng = np.random.default_rng(23)
    for _ in range(30):
        coefficients = [random_scalar(field, rng) for _ in range(int(rng.integers(1, 14)))]
        _, s = shear(field, coefficients)
        tight = v_membership(s)
        bound = tight.to_dict()["stratum_bound"]
        loose = v_membership(s, bound=bound + 2)
        assert tight.member() == loose.member()
        assert tight.remainder() == loose.remainder()


@pytest.mark.parametrize("tag", ["GF(2)", "GF(3)"])
def test_rho_is_additive_on_random_pairs(tag):
    field = parse_field(tag)
    rng = np.random.default_rng(31)
    for _ in range(250):
        f = random_word(field, 2, int(rng.integers(1, 4)), 2, rng, special=True).evaluate()
        g = random_word(field, 2, int(rng.integers(1, 4)), 2, rng, special=True).evaluate()
        assert rho(f.compose(g)) == rho(f) + rho(g)


@given(data=st.data())
def test_m_basis_round_trip(data, gen):
    field = data.draw(gen.fields(("GF(2)", "GF(3)", "GF(4)", "GF(5)")))
    s = data.draw(gen.polys(field, 1, degree=12))
    assert from_m_basis(field, to_m_basis(s)) == s


@given(data=st.data())
def test_class_is_linear(data, gen):
    field = data.draw(gen.fields(("GF(2)", "GF(3)", "GF(4)")))
    s = data.draw(gen.polys(field, 1, degree=10))
    s2 = data.draw(gen.polys(field, 1, degree=10))
    assert v_class(s + s2) == v_class(s) + v_class(s2)
    assert v_membership(s).member() == v_class(s).is_zero()


@given(data=st.data())
def test_rho_is_multiplicative(data, gen):
    field = data.draw(gen.fields(("GF(2)", "GF(3)")))
    f = data.draw(gen.tame_words(field, special=True)).evaluate()
    g = data.draw(gen.tame_words(field, special=True)).evaluate()
    assert rho(f.compose(g)) == rho(f) + rho(g)

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from libautmap.endo.endo import (
    Endo,
    chain_rule_check,
    endo_from_dict,
    format_endo,
    parse_endo,
)
from libautmap.errors import (
    DimensionMismatch,
    PolySyntaxError,
    RingMismatch,
    UnknownVariable,
)
from libautmap.poly.multipoly import MultiPoly
from libautmap.ring.fields import parse_field
from libautmap.ring.paramring import ParamRing, RingKind


def test_parse_endo(endo):
    f = parse_endo("(x1 + 4*x2 + 2, x2)")
    assert f.dimension() == 2
    assert f.ring() == ParamRing(parse_field("QQ"))
    assert str(f) == "(x1 + 4*x2 + 2, x2) over QQ"
    assert f == endo("(x1 + 4*x2 + 2, x2)")

    g = parse_endo("(x1 + [1,0]*x2, x2) over GF(4)")
    assert g.field() == parse_field("GF(2^2)")
    assert parse_endo(format_endo(g)) == g

    family = parse_endo("(x1 + t*x2^2, x2) over QQ[t]")
    assert family.ring().kind() == RingKind.POLY_T
    assert family.has_t()


def test_parse_endo_errors():
    with pytest.raises(PolySyntaxError):
        parse_endo("(x1 +, x2)")
    with pytest.raises(PolySyntaxError):
        parse_endo("x1, x2")
    with pytest.raises(PolySyntaxError):
        parse_endo("((x1, x2)")
    with pytest.raises(UnknownVariable):
        parse_endo("(x1, x3)")
    with pytest.raises(UnknownVariable):
        parse_endo("(x1 + t, x2)")


def test_compose_order(endo):
    f = endo("(x1 + x2^2, x2)")
    g = endo("(x1, x2 + 1)")
    assert f.compose(g) == endo("(x1 + x2^2 + 2*x2 + 1, x2 + 1)")
    assert g.compose(f) == endo("(x1 + x2^2, x2 + 1)")
    assert f @ g == f.compose(g)


def test_compose_errors(endo):
    f = endo("(x1, x2)")
    with pytest.raises(DimensionMismatch):
        f.compose(endo("(x1, x2, x3)"))
    with pytest.raises(RingMismatch):
        f.compose(endo("(x1, x2)", "GF(3)"))
    ring = ParamRing(parse_field("QQ"))
    with pytest.raises(DimensionMismatch):
        Endo([MultiPoly.variable(ring, 3, 1), MultiPoly.variable(ring, 3, 2)])


def test_jacobian(endo):
    f = endo("(x1 + x2^2, x2)")
    assert f.jacobian() == MultiPoly.one(f.ring(), 2)
    assert f.jacobian_unit() == 1

    g = endo("(2*x1, x2 + x1^3)")
    assert g.jacobian_unit() == 2

    h = endo("(x1^2, x2)")
    assert h.jacobian() == MultiPoly.monomial(h.ring(), 2, (0, 1, 0), 2)
    assert h.jacobian_unit() is None

    # x1^3 has zero derivative in characteristic 3
    assert endo("(x1 + x2^3, x2 + x1^3)", "GF(3)").jacobian_unit() == 1

    laurent = parse_endo("(t*x1, x2) over QQ[t,1/t]")
    assert laurent.jacobian_unit() == 1
    assert parse_endo("(t*x1, x2) over QQ[t]").jacobian_unit() is None


def test_derivative_at(endo):
    f = endo("(x1 + x2^2, x2)")
    assert f.derivative().at([1, 2]) == [[1, 4], [0, 1]]
    assert f.derivative().entry(1, 2) == MultiPoly.monomial(f.ring(), 2, (0, 0, 1), 2)


def test_linear_part(endo):
    f = endo("(2*x1 + x2 + 3 + x1^2, x2 - 1)")
    matrix, vector = f.linear_part()
    assert matrix == [[2, 1], [0, 1]]
    assert vector == [3, -1]
    assert not f.fixes_origin()
    assert endo("(x1 + x2^2, x2)").fixes_origin()


def test_translations(endo):
    assert endo("(x1 + 1, x2 - 1/2)").is_translation()
    assert endo("(x1, x2)").is_translation()
    assert endo("(x1, x2)").is_identity()
    assert not endo("(x1 + x2, x2)").is_translation()
    family = parse_endo("(x1 + t^2, x2 + t) over QQ[t]")
    assert family.is_translation()
    assert family.translation_part()[0] == MultiPoly.parameter(family.ring(), 2, 2)


def test_specialize_t():
    family = parse_endo("(x1 - 2*t*x2 - t^2, x2) over QQ[t]")
    assert family.specialize_t(0).is_identity()
    assert family.specialize_t(2) == parse_endo("(x1 - 4*x2 - 4, x2)")
    assert family.specialize_t(0).ring().kind() == RingKind.NO_PARAM


def test_evaluate(endo):
    f = endo("(x1 + x2^2, x2)", "GF(5)")
    assert f.evaluate([1, 3]) == [0, 3]
    g = endo("(x1/2 + x2, x2)")
    assert g.evaluate([1, 0])[0].value() == Fraction(1, 2)


def test_dict_round_trip(endo):
    f = endo("(x1 + [1,1]*x2^3, x2 + 1)", "GF(4)")
    data = f.to_dict()
    assert data["ring"] == "GF(2^2)"
    assert data["dimension"] == 2
    assert endo_from_dict(data) == f


@given(data=st.data())
def test_chain_rule(data, gen):
    field = data.draw(gen.fields())
    f = data.draw(gen.tame_words(field)).evaluate()
    g = data.draw(gen.tame_words(field)).evaluate()
    assert chain_rule_check(f, g)


@given(data=st.data())
def test_jacobian_is_multiplicative(data, gen):
    field = data.draw(gen.fields())
    f = data.draw(gen.tame_words(field)).evaluate()
    g = data.draw(gen.tame_words(field)).evaluate()
    assert f.compose(g).jacobian_unit() == f.jacobian_unit() * g.jacobian_unit()

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from libautmap.errors import (
    CardinalityTooLarge,
    DivisionByZero,
    FieldMismatch,
    InputError,
    NotPrime,
)
from libautmap.ring.fields import FieldDesc, field_make, parse_field
from libautmap.ring.paramring import RingKind, parse_ring
from libautmap.ring.scalar import (
    Scalar,
    field_elements,
    format_scalar,
    parse_scalar,
    scalar_arith,
    scalar_pow,
)

FINITE_FIELD_TAGS = ("GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(9)")


def test_parse_field():
    gf4 = parse_field("GF(4)")
    assert gf4 == parse_field("GF(2^2)")
    assert gf4.cardinality() == 4
    assert gf4.characteristic() == 2
    assert gf4.degree() == 2
    assert gf4.tag() == "GF(2^2)"
    assert parse_field("GF(7)").tag() == "GF(7)"

    qq = parse_field("QQ")
    assert not qq.is_finite()
    assert qq.cardinality() is None
    assert qq.characteristic() == 0


def test_parse_field_errors():
    with pytest.raises(NotPrime):
        parse_field("GF(6)")
    with pytest.raises(NotPrime):
        field_make(4)
    with pytest.raises(CardinalityTooLarge):
        field_make(2, 17)
    with pytest.raises(InputError):
        parse_field("ZZ")


def test_custom_modulus():
    with pytest.raises(InputError):
        FieldDesc(2, 2, [1, 0, 1])
    gf4 = FieldDesc(2, 2, [1, 1, 1])
    assert gf4 == field_make(2, 2)


def test_parse_ring():
    ring = parse_ring("GF(2^2)[t]")
    assert ring.kind() == RingKind.POLY_T
    assert ring.field() == field_make(2, 2)
    assert ring.tag() == "GF(2^2)[t]"
    assert parse_ring("QQ[t,1/t]").allows_negative_t()
    assert not parse_ring("QQ").has_parameter()
    with pytest.raises(InputError):
        parse_ring("QQ[s]")


def test_extension_field_arithmetic():
    gf4 = parse_field("GF(4)")
    x = Scalar(gf4, 2)
    # X^2 = X + 1 modulo the lowest irreducible X^2 + X + 1
    assert x * x == Scalar(gf4, 3)
    assert x + Scalar(gf4, 3) == Scalar(gf4, 1)
    assert x * Scalar(gf4, 3) == 1
    assert x.inverse() == Scalar(gf4, 3)
    assert str(x) == "[1,0]"
    with pytest.raises(InputError):
        Scalar(gf4, 4)


def test_scalar_text_format():
    gf4 = parse_field("GF(4)")
    assert parse_scalar("[1,0]", gf4) == Scalar(gf4, 2)
    assert parse_scalar("[1,1]", gf4) == Scalar(gf4, 3)
    assert format_scalar(Scalar(gf4, 3)) == "[1,1]"

    qq = parse_field("QQ")
    assert parse_scalar("3/2", qq) == Scalar(qq, Fraction(3, 2))
    assert str(Scalar(qq, Fraction(-1, 3))) == "-1/3"

    gf5 = parse_field("GF(5)")
    assert parse_scalar("1/2", gf5) == Scalar(gf5, 3)
    with pytest.raises(DivisionByZero):
        parse_scalar("1/5", gf5)
    with pytest.raises(InputError):
        parse_scalar("[1,0]", qq)
    with pytest.raises(InputError):
        parse_scalar("[1,0,1]", gf4)


def test_scalar_errors():
    gf3 = parse_field("GF(3)")
    gf5 = parse_field("GF(5)")
    with pytest.raises(FieldMismatch):
        Scalar(gf3, 1) + Scalar(gf5, 1)
    with pytest.raises(DivisionByZero):
        Scalar(gf5, 0).inverse()
    with pytest.raises(DivisionByZero):
        Scalar(parse_field("QQ"), 0).inverse()
    with pytest.raises(InputError):
        scalar_arith("pow", Scalar(gf5, 1), Scalar(gf5, 2))


def test_scalar_pow():
    qq = parse_field("QQ")
    assert scalar_pow(Scalar(qq, 2), -2) == Scalar(qq, Fraction(1, 4))
    assert scalar_pow(Scalar(qq, 0), 0) == 1
    gf7 = parse_field("GF(7)")
    assert scalar_pow(Scalar(gf7, 3), 6) == 1
    assert scalar_pow(Scalar(gf7, 3), -1) == Scalar(gf7, 5)


def test_field_elements():
    gf9 = parse_field("GF(9)")
    elements = field_elements(gf9)
    assert len(elements) == 9
    assert len(set(elements)) == 9
    with pytest.raises(InputError):
        field_elements(parse_field("QQ"))


@given(data=st.data())
def test_field_axioms(data, gen):
    field = data.draw(gen.fields())
    a = data.draw(gen.scalars(field))
    b = data.draw(gen.scalars(field))
    c = data.draw(gen.scalars(field))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0
    assert a + (-a) == 0
    if not b.is_zero():
        assert (a / b) * b == a
        assert b * b.inverse() == 1


@given(data=st.data())
def test_frobenius(data, gen):
    field = data.draw(gen.fields(FINITE_FIELD_TAGS))
    a = data.draw(gen.scalars(field))
    b = data.draw(gen.scalars(field))
    p = field.characteristic()
    assert a ** field.cardinality() == a
    assert (a + b) ** p == a**p + b**p


@pytest.mark.parametrize("tag", FINITE_FIELD_TAGS)
def test_characteristic_multiple(tag):
    field = parse_field(tag)
    for a in field_elements(field):
        assert a * field.characteristic() == 0

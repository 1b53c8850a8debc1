import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from libautmap.errors import (
    DimensionMismatch,
    JacobianNotOne,
    JacobianNotUnit,
    NotAutomorphism,
    NotInvertible,
    RingMismatch,
    SingularMatrix,
    VariableLeak,
    ZeroDiagonal,
)
from libautmap.endo.endo import Endo, parse_endo
from libautmap.poly.multipoly import MultiPoly
from libautmap.ring.fields import parse_field
from libautmap.ring.paramring import ParamRing
from libautmap.tame.factor import FactorKind, TameFactor, TameWord
from libautmap.tame.generators import (
    diagonal,
    elementary,
    linear,
    make_generator,
    translation,
)
from libautmap.tame.inverse import affine_inverse, formal_inverse
from libautmap.tame.jvdk import is_automorphism, jvdk_decompose, saut_normalize_word
from libautmap.tame.randomword import random_word

QQ = parse_field("QQ")


def test_generators(endo):
    ring = ParamRing(QQ)
    assert translation(ring, 2, [1, -2]) == endo("(x1 + 1, x2 - 2)")
    assert linear(ring, 2, [[1, 2], [0, 1]]) == endo("(x1 + 2*x2, x2)")
    assert diagonal(ring, 3, [2, 1, 3]) == endo("(2*x1, x2, 3*x3)")
    x2 = MultiPoly.variable(ring, 2, 2)
    assert elementary(ring, 2, 1, x2**2) == endo("(x1 + x2^2, x2)")

    with pytest.raises(VariableLeak):
        elementary(ring, 2, 1, MultiPoly.variable(ring, 2, 1))
    with pytest.raises(DimensionMismatch):
        translation(ring, 2, [1])


def test_make_generator(endo):
    gf3 = parse_field("GF(3)")
    f = make_generator("affine", gf3, 2, matrix=[[1, 1], [0, 1]], vector=[2, 0])
    assert f == endo("(x1 + x2 + 2, x2)", "GF(3)")
    with pytest.raises(SingularMatrix):
        make_generator("linear", gf3, 2, matrix=[[1, 1], [1, 1]])
    ring = ParamRing(gf3)
    g = make_generator(
        "triangular", gf3, 2, scales=[2, 1], shifts=[MultiPoly.zero(ring, 2), MultiPoly.variable(ring, 2, 1) ** 2]
    )
    assert g == endo("(2*x1, x2 + x1^2)", "GF(3)")


def test_triangular_factor():
    ring = ParamRing(QQ)
    x1 = MultiPoly.variable(ring, 2, 1)
    factor = TameFactor.triangular(QQ, [2, 1], [MultiPoly.integer(ring, 2, 1), x1**3])
    assert factor.endo() == parse_endo("(2*x1 + 1, x2 + x1^3)")
    assert factor.jacobian() == 2
    assert factor.inverse().endo().compose(factor.endo()).is_identity()
    assert TameFactor.from_endo(factor.endo(), FactorKind.TRIANGULAR) == factor

    with pytest.raises(ZeroDiagonal):
        TameFactor.triangular(QQ, [0, 1])
    with pytest.raises(SingularMatrix):
        TameFactor.affine(QQ, [[1, 2], [2, 4]])


def test_formal_inverse(endo):
    assert formal_inverse(endo("(x1 + x2^2, x2)")) == endo("(x1 - x2^2, x2)")
    f = endo("(2*x1 + x2^3 + 1, x2 - 5)")
    assert formal_inverse(f).compose(f).is_identity()
    assert affine_inverse(endo("(x1 + x2 + 1, x2)")) == endo("(x1 - x2 - 1, x2)")

    with pytest.raises(JacobianNotUnit):
        formal_inverse(endo("(x1^2, x2)"))


def test_formal_inverse_nagata():
    f = parse_endo("(x1 - 2*x2*(x1*x3 + x2^2) - x3*(x1*x3 + x2^2)^2, x2 + x3*(x1*x3 + x2^2), x3)")
    g = formal_inverse(f)
    assert f.compose(g).is_identity()
    assert g.compose(f).is_identity()
    assert g.degree() == 5


def test_formal_inverse_not_invertible(endo):
    # unit Jacobian over GF(3), but x1 -> x1 + x1^3 is not injective
    with pytest.raises(NotInvertible):
        formal_inverse(endo("(x1 + x1^3, x2)", "GF(3)"))
    with pytest.raises(NotInvertible):
        formal_inverse(endo("(x1 + x1^3, x2, x3)", "GF(3)"))


def test_formal_inverse_over_parameter_ring():
    f = parse_endo("(x1 + t*x2^2, x2) over QQ[t]")
    assert formal_inverse(f) == parse_endo("(x1 - t*x2^2, x2) over QQ[t]")


def apply_word(word, g):
    """
    Returns word o g, composing one factor at a time
    """
    for factor in reversed(word.factors()):
        g = factor.endo().compose(g)
    return g


def test_formal_inverse_of_long_words():
    rng = np.random.default_rng(3)
    random_word(QQ, 2, 5, 4, rng)
    word = random_word(QQ, 2, 5, 4, rng)
    f = word.evaluate()
    g = formal_inverse(f)
    assert g == word.inverse().evaluate()
    assert apply_word(word, g).is_identity()
    assert g.degree() == f.degree()


@pytest.mark.parametrize("tag", ["QQ", "GF(3)"])
def test_formal_inverse_of_random_plane_words(tag):
    field = parse_field(tag)
    rng = np.random.default_rng(2024)
    for _ in range(200):
        word = random_word(field, 2, int(rng.integers(1, 6)), 4, rng)
        f = word.evaluate()
        g = formal_inverse(f)
        assert apply_word(word, g).is_identity()
        assert g.degree() == f.degree()


def test_jvdk_decompose(endo):
    f = endo("(x1, x2 + x1^3)")
    word = jvdk_decompose(f)
    assert word.verify(f)
    assert len(word) == 1
    assert word.factors()[0].kind() == FactorKind.TRIANGULAR

    g = endo("(x1 + x2^2, x2)")
    assert jvdk_decompose(g).evaluate() == g
    assert len(jvdk_decompose(endo("(x1 + 2*x2 + 1, x2)"))) == 1


def test_jvdk_rejects_non_automorphisms(endo):
    with pytest.raises(NotAutomorphism):
        jvdk_decompose(endo("(x1 + x2^2, x2 + x1^2)"))
    with pytest.raises(DimensionMismatch):
        jvdk_decompose(endo("(x1, x2, x3)"))
    with pytest.raises(RingMismatch):
        jvdk_decompose(parse_endo("(x1 + t, x2) over QQ[t]"))
    assert not is_automorphism(endo("(x1^2, x2)"))
    assert is_automorphism(endo("(x1 + x2^2, x2 + (x1 + x2^2)^2)"))


@pytest.mark.parametrize("tag", ["QQ", "GF(3)"])
def test_jvdk_round_trip_on_random_words(tag, endo):
    field = parse_field(tag)
    bent = endo("(x1 + x2^2, x2 + x1^2)", tag)
    rng = np.random.default_rng(41)
    for _ in range(100):
        f = random_word(field, 2, int(rng.integers(1, 5)), 3, rng).evaluate()
        word = jvdk_decompose(f)
        assert word.evaluate() == f
        assert not is_automorphism(bent.compose(f))
    with pytest.raises(NotAutomorphism):
        jvdk_decompose(bent.compose(f))


def test_saut_normalize_word():
    rng = np.random.default_rng(7)
    gf5 = parse_field("GF(5)")
    word = random_word(gf5, 2, 4, 2, rng)
    fix = TameFactor.diagonal(gf5, 2, gf5.inv(word.jacobian()))
    word = TameWord(gf5, 2, [*word.factors(), fix])
    normalized = saut_normalize_word(word)
    assert normalized.evaluate() == word.evaluate()
    assert all(factor.jacobian() == 1 for factor in normalized)

    with pytest.raises(JacobianNotOne):
        saut_normalize_word(TameWord(gf5, 2, [TameFactor.diagonal(gf5, 2, 2)]))


def test_empty_word():
    gf3 = parse_field("GF(3)")
    word = TameWord(gf3, 2)
    assert word.evaluate() == Endo.identity(ParamRing(gf3), 2)
    assert word.jacobian() == 1


def test_random_word_is_reproducible():
    first = random_word(QQ, 2, 3, 3, np.random.default_rng(11))
    second = random_word(QQ, 2, 3, 3, np.random.default_rng(11))
    assert first.evaluate() == second.evaluate()
    assert len(first) == 3
    special = random_word(QQ, 3, 4, 2, np.random.default_rng(3), special=True)
    assert special.evaluate().jacobian_unit() == 1


@given(data=st.data())
def test_inverse_round_trip(data, gen):
    field = data.draw(gen.fields())
    f = data.draw(gen.tame_words(field)).evaluate()
    g = formal_inverse(f)
    assert f.compose(g).is_identity()
    assert g.compose(f).is_identity()
    assert g.degree() == f.degree()


@given(data=st.data())
def test_inverse_in_dimension_three(data, gen):
    field = data.draw(gen.fields())
    f = data.draw(gen.tame_words(field, n=3, max_length=2)).evaluate()
    assert formal_inverse(f).compose(f).is_identity()


@given(data=st.data())
def test_inverse_word(data, gen):
    field = data.draw(gen.fields())
    word = data.draw(gen.tame_words(field))
    assert word.inverse().evaluate() == formal_inverse(word.evaluate())


@given(data=st.data())
def test_jvdk_recomposes(data, gen):
    field = data.draw(gen.fields())
    f = data.draw(gen.tame_words(field, max_length=4)).evaluate()
    word = jvdk_decompose(f)
    assert word.evaluate() == f
    assert all(factor.kind() in (FactorKind.AFFINE, FactorKind.TRIANGULAR) for factor in word)

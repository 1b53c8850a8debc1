from fractions import Fraction
from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from libautmap.endo.endo import parse_endo
from libautmap.poly.multipoly import MultiPoly
from libautmap.ring.fields import parse_field
from libautmap.ring.paramring import ParamRing
from libautmap.ring.scalar import Scalar
from libautmap.tame.randomword import random_word

settings.register_profile(
    "autmap",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("autmap")

FIELD_TAGS = ("QQ", "GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(9)")
FINITE_FIELD_TAGS = FIELD_TAGS[1:]


def fields(tags=FIELD_TAGS):
    return st.sampled_from(tags).map(parse_field)


@st.composite
def scalars(draw, field, nonzero=False):
    if field.is_finite():
        low = 1 if nonzero else 0
        return Scalar(field, draw(st.integers(low, field.cardinality() - 1)))
    numerator = draw(st.integers(-6, 6).filter(lambda k: k != 0 or not nonzero))
    return Scalar(field, Fraction(numerator, draw(st.integers(1, 4))))


@st.composite
def polys(draw, field, nvars, degree=3, max_terms=4, skip=()):
    """
    Polynomials over the field in x1..x_nvars, leaving out the variables
    listed in skip
    """
    ring = ParamRing(field)
    allowed = [i for i in range(1, nvars + 1) if i not in skip]
    p = MultiPoly.zero(ring, nvars)
    for _ in range(draw(st.integers(0, max_terms))):
        e = [0] * (nvars + 1)
        for _ in range(draw(st.integers(0, degree))):
            e[draw(st.sampled_from(allowed))] += 1
        p = p + MultiPoly.monomial(ring, nvars, tuple(e), draw(scalars(field)))
    return p


@st.composite
def tame_words(draw, field, n=2, max_length=3, degree=2, special=False):
    seed = draw(st.integers(0, 2**32 - 1))
    length = draw(st.integers(1, max_length))
    return random_word(field, n, length, degree, np.random.default_rng(seed), special)


@pytest.fixture(scope="session")
def gen():
    """
    The shared hypothesis strategies, drawn inside tests with st.data()
    """
    return SimpleNamespace(
        fields=fields,
        scalars=scalars,
        polys=polys,
        tame_words=tame_words,
    )


@pytest.fixture(scope="session")
def endo():
    """
    Parses a map, i.e. endo("(x1 + x2^2, x2)", "GF(3)")
    """

    def parse(text, field="QQ"):
        return parse_endo(f"{text:s} over {field:s}")

    return parse

import logging

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from libautmap.degeneration import (
    alexander_family,
    commutator_pipeline,
    degenerate,
    find_noncommuting_translation,
    find_witness,
    limit_polynomials,
    sln_extraction,
    slope,
)
from libautmap.degeneration import alexander, pipeline
from libautmap.endo.endo import Endo, parse_endo
from libautmap.errors import (
    DegenerateGeometry,
    DoesNotFixOrigin,
    FieldNotInfinite,
    FixedPointMissing,
    IdentityInput,
    InputError,
    InvariantViolation,
    IsTranslation,
    JacobianNotUnit,
    JacobianNotOne,
    NotIdAtZero,
    RingMismatch,
)
from libautmap.identities import nagata_map
from libautmap.ring.fields import parse_field
from libautmap.ring.paramring import ParamRing
from libautmap.ring.scalar import Scalar
from libautmap.tame.generators import translation
from libautmap.tame.randomword import random_word

QQ = parse_field("QQ")


def family(text):
    return parse_endo(f"{text:s} over QQ[t]")


def scalars(*values):
    return [Scalar(QQ, v) for v in values]


def test_slope():
    assert slope(family("(x1 - 2*t*x2 - t^2, x2)")) == (1, 1)
    assert slope(family("(x1 + t*x2^3, x2)")) == (3, 1)
    assert slope(family("(x1 + t^2*x2, x2 + t^3)")) == (1, 2)
    assert slope(family("(x1 + t, x2)")) == (0, 1)


def test_slope_errors():
    with pytest.raises(IdentityInput):
        slope(family("(x1, x2)"))
    with pytest.raises(NotIdAtZero):
        slope(family("(x1 + 1 + t, x2)"))
    with pytest.raises(RingMismatch):
        slope(parse_endo("(x1 + 1, x2)"))


def test_limit_polynomials():
    polys = limit_polynomials(family("(x1 - 2*t*x2 - t^2, x2)"))
    assert polys[0] == parse_endo("(-2*x2, x2)").component(1)
    assert polys[1].is_zero()


def test_degenerate_commutator_family():
    g = family("(x1 - 2*t*x2 - t^2, x2)")
    eps = find_witness(g)
    assert eps == scalars(0, 1)

    cert = degenerate(g, eps)
    assert cert.slope() == (1, 1)
    assert cert.limit() == parse_endo("(x1 - 2, x2)")
    assert cert.limit().is_translation()
    assert cert.nontrivial()
    assert cert.verified()
    assert [t0 for t0, _ in cert.sample_checks()] == [1, 2]
    for c in cert.conjugate().components():
        assert c.t_range()[0] >= 0

    trivial = degenerate(g, scalars(5, 0))
    assert trivial.limit().is_identity()
    assert not trivial.nontrivial()


def test_degenerate_translation_family():
    g = family("(x1 + t, x2)")
    cert = degenerate(g, find_witness(g))
    assert cert.slope() == (0, 1)
    assert cert.limit() == parse_endo("(x1 + 1, x2)")
    assert cert.nontrivial()


def test_translation_family_checks_compose(monkeypatch):
    calls = []
    compose = Endo.compose

    def counting_compose(self, g, degree_bound=None):
        calls.append(g)
        return compose(self, g, degree_bound)

    monkeypatch.setattr(Endo, "compose", counting_compose)
    cert = degenerate(family("(x1 + t, x2)"), scalars(0, 0))
    assert cert.sample_checks() == [(1, True), (2, True)]
    assert len(calls) == 4


def test_commutator_pipeline_on_linear_map(endo, monkeypatch):
    f = endo("(x1 + x2, x2)")
    cert = commutator_pipeline(f)
    assert cert.family() == family("(x1 - t, x2)")
    assert cert.slope() == (0, 1)
    assert cert.limit() == endo("(x1 - 1, x2)")
    assert cert.sample_checks() == [(1, True), (2, True)]

    # the direct compositions must use the same parameter value as the family
    monkeypatch.setattr(pipeline, "translation_point", lambda g: 2)
    with pytest.raises(InvariantViolation):
        commutator_pipeline(f)


def test_degenerate_certificate_dict():
    cert = degenerate(family("(x1 + t*x2^3, x2)"), scalars(0, 1))
    data = cert.to_dict()
    assert data["slope"] == [3, 1]
    assert data["witness"] == ["0", "1"]
    assert data["limit"] == "(x1 + 1, x2) over QQ"
    assert data["limit_is_translation"]
    assert data["verified"]
    assert "source" not in data


def test_find_witness_errors():
    with pytest.raises(FieldNotInfinite):
        find_witness(parse_endo("(x1 + t*x2, x2) over GF(5)[t]"))
    # the limit polynomial x1^2 x2 - x1 x2^2 vanishes on {0, 1}^2
    g = family("(x1 + t*(x1^2*x2 - x1*x2^2), x2)")
    with pytest.raises(InputError):
        find_witness(g, height=1)
    assert find_witness(g) == scalars(1, 2)


def test_noncommuting_translation(endo):
    tau = find_noncommuting_translation(endo("(x1 + x2^2, x2)"))
    assert tau == endo("(x1, x2 + 1)")
    assert find_noncommuting_translation(endo("(x1 + 3, x2 - 1)")) is None
    with pytest.raises(FieldNotInfinite):
        find_noncommuting_translation(endo("(x1 + x2^2, x2)", "GF(3)"))


def test_commutator_pipeline(endo):
    f = endo("(x1 + x2^2, x2)")
    cert = commutator_pipeline(f)
    assert cert.family() == family("(x1 - 2*t*x2 - t^2, x2)")
    assert cert.slope() == (1, 1)
    assert cert.limit() == endo("(x1 - 2, x2)")
    assert cert.source() == f
    assert cert.direction() == family("(x1, x2 + t)")
    assert cert.verified()
    assert cert.nontrivial()
    assert cert.to_dict()["source"] == "(x2^2 + x1, x2) over QQ"


def test_commutator_pipeline_in_dimension_three():
    f = parse_endo("(x1 + x2*x3, x2 + x3^2, x3)")
    cert = commutator_pipeline(f)
    assert cert.verified()
    assert cert.nontrivial()
    assert cert.limit().dimension() == 3


def test_commutator_pipeline_errors(endo):
    with pytest.raises(IsTranslation):
        commutator_pipeline(endo("(x1 + 1, x2)"))
    with pytest.raises(JacobianNotOne):
        commutator_pipeline(endo("(2*x1 + x2^2, x2)"))
    with pytest.raises(RingMismatch):
        commutator_pipeline(family("(x1 + t, x2)"))


def test_alexander_family(endo):
    f = endo("(x1 + x2^2, x2 + x1^3 + 2*x1*x2^2)")
    g = alexander_family(endo("(x1 + x2^2, x2)"))
    assert g == family("(x1 + t*x2^2, x2)")
    assert g.specialize_t(0).is_identity()

    h = endo("(2*x1 + x2 + x2^3, x2)")
    family_h = alexander_family(h)
    assert family_h.specialize_t(0) == endo("(2*x1 + x2, x2)")
    assert family_h.specialize_t(1) == h

    with pytest.raises(DoesNotFixOrigin):
        alexander_family(endo("(x1 + 1, x2)"))
    with pytest.raises(JacobianNotUnit):
        alexander_family(f)


def test_sln_extraction(endo):
    result = sln_extraction(endo("(x1 + 1, x2)"), [0, 0], [1, 0])
    assert result.is_elementary()
    assert result.matrix() == [[1, 0], [1, 1]]
    assert result.f().fixes_origin()
    assert all(ok for _, ok in result.sample_checks())
    assert result.to_dict()["limit_matrix"] == [["1", "0"], ["1", "1"]]


def test_sln_extraction_errors(endo):
    h = endo("(x1 + 1, x2)")
    with pytest.raises(DegenerateGeometry):
        sln_extraction(h, [0, 0], [0, 0])
    with pytest.raises(FixedPointMissing):
        sln_extraction(h, [0, 0], [2, 0])


def test_sln_extraction_warns_on_large_conjugates(endo, monkeypatch, caplog):
    monkeypatch.setattr(alexander, "SLN_DEGREE_WARNING", 0)
    with caplog.at_level(logging.WARNING, logger="libautmap.degeneration.alexander"):
        result = sln_extraction(endo("(x1 + 1, x2)"), [0, 0], [1, 0])
    assert result.is_elementary()
    assert "may reach degree 9" in caplog.text


def test_sln_extraction_on_random_words():
    rng = np.random.default_rng(7)
    done = 0
    while done < 20:
        h = random_word(QQ, 2, int(rng.integers(1, 3)), 2, rng).evaluate()
        p = [int(v) for v in rng.integers(-2, 3, size=2)]
        q = h.evaluate(p)
        if q == scalars(*p):
            continue
        result = sln_extraction(h, p, q)
        assert result.is_elementary()
        assert result.family().specialize_t(0).linear_part()[0] == result.matrix()
        assert [ok for _, ok in result.sample_checks()] == [True, True]
        done += 1


def test_alexander_family_on_random_words():
    rng = np.random.default_rng(5)
    for _ in range(100):
        f = random_word(QQ, 2, int(rng.integers(1, 4)), 2, rng).evaluate()
        f = translation(f.ring(), 2, [-v for v in f.evaluate([0, 0])]).compose(f)
        g = alexander_family(f)
        assert g.specialize_t(1) == f
        assert g.specialize_t(0).linear_part()[0] == f.linear_part()[0]
        assert g.specialize_t(0).fixes_origin()


def test_noncommuting_translation_on_random_words():
    rng = np.random.default_rng(13)
    for _ in range(100):
        f = random_word(QQ, 2, int(rng.integers(1, 5)), 3, rng).evaluate()
        tau = find_noncommuting_translation(f)
        if f.is_translation():
            assert tau is None
        else:
            assert f.compose(tau) != tau.compose(f)


def test_pipeline_on_random_special_words():
    rng = np.random.default_rng(11)
    done = 0
    while done < 50:
        f = random_word(QQ, 2, int(rng.integers(1, 5)), 3, rng, special=True).evaluate()
        if f.is_translation():
            continue
        cert = commutator_pipeline(f)
        assert cert.verified()
        assert cert.nontrivial()
        assert [ok for _, ok in cert.sample_checks()] == [True, True]
        for c in cert.conjugate().components():
            assert c.t_range()[0] >= 0
        done += 1


def test_commutator_pipeline_on_nagata_map():
    n_1 = nagata_map(ParamRing(QQ), Scalar(QQ, 1))
    cert = commutator_pipeline(n_1)
    assert cert.verified()
    assert cert.nontrivial()
    assert cert.source() == n_1
    for c in cert.conjugate().components():
        assert c.t_range()[0] >= 0


@given(data=st.data())
def test_pipeline_on_random_words(data, gen):
    word = data.draw(gen.tame_words(QQ, max_length=2, degree=2, special=True))
    f = word.evaluate()
    assume(not f.is_translation())
    cert = commutator_pipeline(f)
    assert cert.verified()
    assert cert.nontrivial()
    for c in cert.conjugate().components():
        assert c.t_range()[0] >= 0

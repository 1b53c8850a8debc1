import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from libautmap.endo.endo import parse_endo
from libautmap.errors import (
    DimensionMismatch,
    FieldTooSmall,
    InputError,
    VariableLeak,
    WrongCharacteristic,
    ZeroScalar,
)
from libautmap.identities import (
    grid_suite,
    nagata_map,
    nagata_suite,
    parameter_values,
    random_suite,
    special_linear_transport,
    verify_char2_identity,
    verify_elementary_additivity,
    verify_gl_conjugation,
    verify_h_commutator,
    verify_translation_conjugacy,
    verify_u_commutator,
)
from libautmap.endo.matrix import mat_det, mat_vec
from libautmap.poly.parser import parse_poly
from libautmap.ring.fields import parse_field
from libautmap.ring.paramring import ParamRing
from libautmap.ring.scalar import Scalar
from libautmap.tame.inverse import formal_inverse

QQ = parse_field("QQ")


def poly(text, n, field="QQ"):
    return parse_poly(text, ParamRing(parse_field(field)), n)


def test_h_commutator():
    report = verify_h_commutator(poly("2*x2^2", 2), [1])
    assert report.verdict()
    assert report.rhs() == parse_endo("(x1 + 4*x2 + 2, x2)")

    report = verify_h_commutator(poly("x2*x3", 3), [0, 5])
    assert report.verdict()
    assert report.rhs() == parse_endo("(x1 + 5*x2, x2, x3)")

    assert verify_h_commutator(poly("0", 2), [3]).lhs().is_identity()
    assert verify_h_commutator(poly("x2^5", 2, "GF(5)"), [1]).rhs() == parse_endo(
        "(x1 + 1, x2) over GF(5)"
    )


def test_h_commutator_errors():
    with pytest.raises(VariableLeak):
        verify_h_commutator(poly("x1*x2", 2), [1])
    with pytest.raises(DimensionMismatch):
        verify_h_commutator(poly("x2", 2), [1, 2])
    with pytest.raises(DimensionMismatch):
        verify_h_commutator(poly("1", 1), [])


def test_char2_identity():
    gf4 = parse_field("GF(4)")
    theta = Scalar(gf4, 2)
    mu = Scalar(gf4, 3)
    report = verify_char2_identity(theta, mu, Scalar(gf4, 1))
    assert report.verdict()
    # theta mu = 1 and theta + mu = 1 for the two generators of GF(4)
    assert report.rhs() == parse_endo("(x1 + x2, x2) over GF(4)")

    same = verify_char2_identity(theta, theta, Scalar(gf4, 3))
    assert same.verdict()
    assert same.rhs().is_identity()


def test_char2_identity_errors():
    gf2 = parse_field("GF(2)")
    with pytest.raises(FieldTooSmall):
        verify_char2_identity(Scalar(gf2, 1), Scalar(gf2, 1), Scalar(gf2, 1))
    gf3 = parse_field("GF(3)")
    with pytest.raises(WrongCharacteristic):
        verify_char2_identity(Scalar(gf3, 1), Scalar(gf3, 2), Scalar(gf3, 1))
    with pytest.raises(WrongCharacteristic):
        verify_char2_identity(1, 2, 3)


def test_u_commutator():
    report = verify_u_commutator(poly("x2^2", 2), [2])
    assert report.verdict()
    assert report.rhs() == parse_endo("(x1 + 7*x2^2, x2)")

    report = verify_u_commutator(poly("x2*x3^2", 3), [2, 3])
    assert report.verdict()
    assert report.rhs() == parse_endo("(x1 + 107*x2*x3^2, x2, x3)")

    assert verify_u_commutator(poly("x2^3 + x2", 2), [1]).lhs().is_identity()
    with pytest.raises(ZeroScalar):
        verify_u_commutator(poly("x2", 2), [0])


def test_gl_conjugation():
    assert verify_gl_conjugation(poly("x2^2", 2), 2).verdict()
    assert verify_gl_conjugation(poly("x2*x3 + 1", 3), -1).verdict()
    gf3 = parse_field("GF(3)")
    assert verify_gl_conjugation(poly("x2^3", 2, "GF(3)"), Scalar(gf3, 2)).verdict()
    with pytest.raises(InputError):
        verify_gl_conjugation(poly("x2", 2), 1)
    with pytest.raises(ZeroScalar):
        verify_gl_conjugation(poly("x2", 2), 0)


def test_translation_conjugacy():
    report = verify_translation_conjugacy([1, 0], [2, 3])
    assert report.verdict()
    assert report.rhs() == parse_endo("(x1 + 2, x2 + 3)")

    gf5 = parse_field("GF(5)")
    v = [Scalar(gf5, 0), Scalar(gf5, 4), Scalar(gf5, 1)]
    w = [Scalar(gf5, 3), Scalar(gf5, 0), Scalar(gf5, 0)]
    assert verify_translation_conjugacy(v, w).verdict()

    with pytest.raises(ZeroScalar):
        verify_translation_conjugacy([0, 0], [1, 0])
    with pytest.raises(DimensionMismatch):
        verify_translation_conjugacy([1], [1])


def test_special_linear_transport():
    gf7 = parse_field("GF(7)")
    v = [Scalar(gf7, 3), Scalar(gf7, 5)]
    w = [Scalar(gf7, 0), Scalar(gf7, 2)]
    m = special_linear_transport(gf7, v, w)
    assert mat_det(gf7, m) == 1
    assert mat_vec(gf7, m, [x.value() for x in v]) == [x.value() for x in w]


def test_elementary_additivity():
    report = verify_elementary_additivity(poly("x2^2", 2), poly("3*x2 + 1", 2))
    assert report.verdict()
    assert report.rhs() == parse_endo("(x1 + x2^2 + 3*x2 + 1, x2)")


def test_report_dict():
    data = verify_u_commutator(poly("x2^2", 2), [2]).to_dict()
    assert data["identity"] == "u_commutator"
    assert data["parameters"] == {"q": "x2^2", "alpha": ["2"]}
    assert data["rhs"] == "(7*x2^2 + x1, x2) over QQ"
    assert data["verdict"]


def test_nagata_suite():
    reports = nagata_suite(1, 2, 2)
    assert [r.name() for r in reports] == [
        "nagata_invariant",
        "nagata_additive",
        "nagata_jacobian",
        "nagata_scaling",
        "nagata_conjugate_to_linear",
    ]
    assert all(r.verdict() for r in reports)

    gf5 = parse_field("GF(5)")
    assert all(r.verdict() for r in nagata_suite(1, 3, 2, gf5))
    assert all(r.verdict() for r in nagata_suite(0, 0, 4, gf5))
    assert all(r.verdict() for r in nagata_suite(Scalar(QQ, 3), -3, 5))

    with pytest.raises(ZeroScalar):
        nagata_suite(1, 2, 0)


@pytest.mark.parametrize("alpha", range(-4, 6))
def test_nagata_suite_on_rational_grid(alpha):
    units = (1, -1, 2, -2, 3, -3, 5, 7, -7, 11)
    for beta, u in zip(range(-4, 6), units):
        reports = nagata_suite(alpha, beta, u, QQ)
        assert all(r.verdict() for r in reports), (alpha, beta, u)


def test_nagata_suite_exhaustive_over_gf5():
    gf5 = parse_field("GF(5)")
    for alpha, beta, u in itertools.product(range(5), range(5), range(1, 5)):
        reports = nagata_suite(alpha, beta, u, gf5)
        assert all(r.verdict() for r in reports), (alpha, beta, u)


def test_nagata_inverse():
    ring = ParamRing(QQ)
    n_1 = nagata_map(ring, Scalar(QQ, 1))
    assert n_1.degree() == 5
    assert formal_inverse(n_1) == nagata_map(ring, Scalar(QQ, -1))


def test_parameter_values():
    assert len(parameter_values(parse_field("GF(4)"))) == 4
    values = parameter_values(QQ, 2)
    assert [v.value() for v in values] == [-2, -1, 0, 1, 2]


@pytest.mark.parametrize("tag", ["GF(2)", "GF(3)", "GF(4)", "GF(5)"])
def test_grid_suite(tag):
    reports = grid_suite(parse_field(tag))
    assert reports
    assert all(r.verdict() for r in reports)


def test_grid_suite_covers_char2_identity():
    names = {r.name() for r in grid_suite(parse_field("GF(4)"))}
    assert "char2_identity" in names
    assert "gl_conjugation" in names
    names = {r.name() for r in grid_suite(parse_field("GF(2)"))}
    assert "char2_identity" not in names
    assert "gl_conjugation" not in names


def test_grid_suite_over_rationals():
    reports = grid_suite(QQ, height=1)
    assert all(r.verdict() for r in reports)
    assert "char2_identity" not in {r.name() for r in reports}


@pytest.mark.parametrize("tag", ["QQ", "GF(2)", "GF(4)", "GF(7)", "GF(9)"])
def test_random_suite(tag):
    field = parse_field(tag)
    reports = random_suite(field, 10, np.random.default_rng(2024))
    assert all(r.verdict() for r in reports)
    again = random_suite(field, 10, np.random.default_rng(2024))
    assert [r.to_dict() for r in reports] == [r.to_dict() for r in again]


def test_random_suite_on_hundred_rational_draws():
    reports = random_suite(QQ, 100, np.random.default_rng(99))
    names = {r.name() for r in reports}
    assert {"h_commutator", "u_commutator"} <= names
    assert all(r.verdict() for r in reports)


@given(data=st.data())
def test_additivity_property(data, gen):
    field = data.draw(gen.fields())
    s = data.draw(gen.polys(field, 3, skip=(1,)))
    s2 = data.draw(gen.polys(field, 3, skip=(1,)))
    assert verify_elementary_additivity(s, s2).verdict()


@given(data=st.data())
def test_h_commutator_property(data, gen):
    field = data.draw(gen.fields())
    q = data.draw(gen.polys(field, 3, skip=(1,)))
    eps = [data.draw(gen.scalars(field)) for _ in range(2)]
    assert verify_h_commutator(q, eps).verdict()


@given(data=st.data())
def test_u_commutator_property(data, gen):
    field = data.draw(gen.fields())
    q = data.draw(gen.polys(field, 3, skip=(1,)))
    alpha = [data.draw(gen.scalars(field, nonzero=True)) for _ in range(2)]
    assert verify_u_commutator(q, alpha).verdict()

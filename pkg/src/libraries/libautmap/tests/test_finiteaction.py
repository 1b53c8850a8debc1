import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from libautmap.errors import InputError, RingMismatch, TooManyPoints
from libautmap.finiteaction import (
    FieldArrays,
    PointGrid,
    centraliser_counterexample,
    even_action_census,
    fixed_locus_count,
    parity_witness,
    permutation_of,
    permutation_order,
)
from libautmap.endo.endo import parse_endo
from libautmap.ring.fields import parse_field


def test_translation_sign(endo):
    rep = permutation_of(endo("(x1 + 1, x2)", "GF(2)"))
    assert rep.bijective()
    assert rep.sign() == 1
    assert rep.cycle_type() == {2: 2}
    assert rep.num_cycles() == 2


def test_odd_elementary_map(endo):
    rep = permutation_of(endo("(x1 + x2, x2)", "GF(2)"))
    assert rep.sign() == -1
    assert rep.cycle_type() == {1: 2, 2: 1}
    assert rep.fixed_points() == 2


def test_non_bijective_map(endo):
    rep = permutation_of(endo("(x1^2, x2)", "GF(3)"))
    assert not rep.bijective()
    assert rep.sign() is None
    assert rep.cycle_type() is None
    with pytest.raises(InputError):
        rep.order()
    data = rep.to_dict()
    assert data["bijective"] is False
    assert data["cycle_type"] is None


def test_fixed_locus(endo):
    assert fixed_locus_count(endo("(x1 + x2, x2)", "GF(4)")) == 4
    assert fixed_locus_count(endo("(x1, x2)", "GF(3)")) == 9
    assert fixed_locus_count(endo("(x1 + 1, x2)", "GF(3)")) == 0


def test_order(endo):
    assert permutation_order(permutation_of(endo("(x1 + 1, x2)", "GF(3)"))) == 3
    assert permutation_of(endo("(2*x1, x2)", "GF(5)")).order() == 4
    assert permutation_of(endo("(x1, x2)", "GF(2)")).order() == 1


def test_perm_dict(endo):
    data = permutation_of(endo("(x1 + 1, x2)", "GF(2)")).to_dict()
    assert data == {
        "field": "GF(2)",
        "dimension": 2,
        "points": 4,
        "bijective": True,
        "cycle_type": [{"length": 2, "count": 2}],
        "sign": 1,
        "fixed_points": 0,
    }


def test_point_grid():
    gf3 = parse_field("GF(3)")
    grid = PointGrid(gf3, 2)
    assert grid.size() == 9
    assert [x.value() for x in grid.point(5)] == [1, 2]
    coords = grid.coordinates()
    assert coords.shape == (2, 9)
    assert np.array_equal(grid.index_of([coords[0], coords[1]]), np.arange(9))

    with pytest.raises(TooManyPoints):
        PointGrid(parse_field("GF(5)"), 3, cap=100)
    with pytest.raises(InputError):
        PointGrid(parse_field("QQ"), 2)


def test_point_grid_cap_from_environment(monkeypatch):
    monkeypatch.setenv("AUTMAP_MAX_POINTS", "10")
    with pytest.raises(TooManyPoints):
        PointGrid(parse_field("GF(2)"), 4)


def test_permutation_errors(endo):
    with pytest.raises(RingMismatch):
        permutation_of(parse_endo("(x1 + t, x2) over GF(3)[t]"))
    grid = PointGrid(parse_field("GF(3)"), 2)
    with pytest.raises(RingMismatch):
        grid.image_table(endo("(x1 + 1, x2)", "GF(5)"))


def test_field_arrays_match_scalar_arithmetic():
    gf9 = parse_field("GF(9)")
    arrays = FieldArrays(gf9)
    pairs = np.array(list(itertools.product(range(9), repeat=2)), dtype=np.int64)
    a, b = pairs[:, 0], pairs[:, 1]
    assert list(arrays.mul(a, b)) == [gf9.mul(int(x), int(y)) for x, y in pairs]
    assert list(arrays.add(a, b)) == [gf9.add(int(x), int(y)) for x, y in pairs]
    assert list(arrays.pow(np.arange(9), 8)) == [0] + [1] * 8
    assert list(arrays.pow(np.arange(9), 0)) == [1] * 9


def test_parity_witness():
    gf2 = parse_field("GF(2)")
    assert parity_witness(gf2, 3) == parse_endo("(x1 + x2*x3, x2, x3) over GF(2)")
    assert parity_witness(gf2, 1) == parse_endo("(x1 + 1) over GF(2)")
    assert permutation_of(parity_witness(gf2, 3)).cycle_type() == {1: 6, 2: 1}


@pytest.mark.parametrize("q, n", list(itertools.product([2, 3, 4, 5], [1, 2, 3])))
def test_even_action_census(q, n):
    report = even_action_census(q, n)
    assert report["consistent"]
    assert report["group_even"] == (q > 2)
    assert report["translations_even"] == ((q, n) != (2, 1))
    assert report["points"] == q**n


def test_census_witness_is_odd_over_gf2():
    report = even_action_census(2, 2)
    assert report["witness"] == "(x1 + x2, x2) over GF(2)"
    assert report["witness_sign"] == -1
    assert report["elementary_even"] is False
    assert report["odd_generator"] is not None


def test_census_without_exhaustive_translations(monkeypatch):
    monkeypatch.setenv("AUTMAP_TRANSLATION_ENUMERATION_LIMIT", "8")
    report = even_action_census(3, 2)
    assert not report["translations_exhaustive"]
    assert report["translations_checked"] == 2
    assert report["consistent"]


def test_census_cap():
    with pytest.raises(TooManyPoints):
        even_action_census(5, 3, cap=100)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_centraliser_counterexample(q):
    report = centraliser_counterexample(q)
    assert report["verified"]
    assert report["commutes_with_translations"]
    assert report["acts_trivially"]
    assert not report["is_translation"]


@given(data=st.data())
def test_sign_is_multiplicative(data, gen):
    field = data.draw(gen.fields(("GF(2)", "GF(3)", "GF(4)")))
    f = data.draw(gen.tame_words(field)).evaluate()
    g = data.draw(gen.tame_words(field)).evaluate()
    rep_f = permutation_of(f)
    rep_g = permutation_of(g)
    rep_fg = permutation_of(f.compose(g))
    assert np.array_equal(rep_fg.table(), rep_f.table()[rep_g.table()])
    assert rep_fg.sign() == rep_f.sign() * rep_g.sign()

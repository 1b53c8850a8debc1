import pytest
from libautmap.errors import InputError
from libautmap.settings import DEFAULTS, max_points, max_quotient_field, setting


def test_defaults(monkeypatch):
    for name in DEFAULTS:
        monkeypatch.delenv(name, raising=False)
    assert max_points() == 10**7
    assert max_quotient_field() == 256
    assert setting("AUTMAP_MAX_DETERMINANT_DIM") == 6


def test_environment_override(monkeypatch):
    monkeypatch.setenv("AUTMAP_MAX_POINTS", "1000")
    assert max_points() == 1000


@pytest.mark.parametrize("raw", ["many", "0", "-3", "1.5"])
def test_invalid_override(monkeypatch, raw):
    monkeypatch.setenv("AUTMAP_CENSUS_MAX_POINTS", raw)
    with pytest.raises(InputError):
        setting("AUTMAP_CENSUS_MAX_POINTS")


def test_unknown_setting():
    with pytest.raises(KeyError):
        setting("AUTMAP_COLOUR")

import pytest

from qpack import units


def test_bare_numbers_are_si():
    assert units.parse_length(0.5) == 0.5
    assert units.parse_frequency(5e9) == 5e9
    assert units.parse_length("0.5") == 0.5


@pytest.mark.parametrize("text,expected", [
    ("0.508mm", 0.508e-3),
    ("35um", 35e-6),
    ("16.2mm", 16.2e-3),
    ("1nm", 1e-9),
])
def test_lengths(text, expected):
    assert units.parse_length(text) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("text,expected", [
    ("5.372GHz", 5.372e9),
    ("2MHz", 2e6),
    ("350ns", 350e-9),
    ("3.47us", 3.47e-6),
])
def test_frequency_and_time(text, expected):
    if text.endswith("Hz"):
        assert units.parse_frequency(text) == pytest.approx(expected, rel=1e-12)
    else:
        assert units.parse_time(text) == pytest.approx(expected, rel=1e-12)


def test_resistance_and_reactive():
    assert units.parse_resistance("50mohm") == pytest.approx(0.05)
    assert units.parse_inductance("0.2nH") == pytest.approx(0.2e-9)
    assert units.parse_capacitance("0.1pF") == pytest.approx(0.1e-12)
    assert units.parse_area("1mm2") == pytest.approx(1e-6)


def test_wrong_dimension_rejected():
    with pytest.raises(units.UnitError):
        units.parse_length("5GHz")
    with pytest.raises(units.UnitError):
        units.parse_frequency("3mm")
    with pytest.raises(units.UnitError):
        units.parse_time("fast")

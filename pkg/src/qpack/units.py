"""Parsing of unit-suffixed quantities used in config files and CLI flags.

Internally everything is SI: meters, seconds, hertz, ohms, farads, henries.
A bare number is taken as the SI base unit of the expected dimension; a
string must carry one of the recognized suffixes ("0.508mm", "5.372GHz",
"50mohm").  Mixed-unit presentation in source material is the main source
of silent errors this module exists to prevent.
"""

from __future__ import annotations

import re

_NUMBER = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_QUANTITY_RE = re.compile(rf"^\s*({_NUMBER})\s*([a-zA-Zµ²2*.]*)\s*$")

# scale factors per dimension, keyed by suffix
_LENGTH = {"m": 1.0, "mm": 1e-3, "um": 1e-6, "µm": 1e-6, "nm": 1e-9, "cm": 1e-2}
_TIME = {"s": 1.0, "ms": 1e-3, "us": 1e-6, "µs": 1e-6, "ns": 1e-9, "ps": 1e-12}
_FREQUENCY = {"Hz": 1.0, "kHz": 1e3, "MHz": 1e6, "GHz": 1e9, "hz": 1.0,
              "khz": 1e3, "mhz": 1e6, "ghz": 1e9}
_RESISTANCE = {"ohm": 1.0, "Ohm": 1.0, "mohm": 1e-3, "uohm": 1e-6,
               "kohm": 1e3, "Mohm": 1e6}
_CAPACITANCE = {"F": 1.0, "pF": 1e-12, "fF": 1e-15, "nF": 1e-9, "uF": 1e-6}
_INDUCTANCE = {"H": 1.0, "nH": 1e-9, "pH": 1e-12, "uH": 1e-6}
_AREA = {"m2": 1.0, "m**2": 1.0, "m²": 1.0,
         "mm2": 1e-6, "mm**2": 1e-6, "mm²": 1e-6,
         "um2": 1e-12, "um**2": 1e-12, "µm²": 1e-12}
_RESISTIVITY = {"ohm.m": 1.0, "ohm*m": 1.0, "Ohm.m": 1.0, "Ohm*m": 1.0}
_DIMENSIONLESS = {"": 1.0}


class UnitError(ValueError):
    """A quantity string could not be resolved to the expected dimension."""


def _parse(value, table: dict[str, float], dimension: str) -> float:
    if isinstance(value, bool):
        raise UnitError(f"expected a {dimension} quantity, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if not isinstance(value, str):
        raise UnitError(f"expected a {dimension} quantity, got {value!r}")
    m = _QUANTITY_RE.match(value)
    if not m:
        raise UnitError(f"cannot parse {dimension} quantity {value!r}")
    number, suffix = m.groups()
    if suffix == "":
        return float(number)
    if suffix not in table:
        raise UnitError(
            f"unknown {dimension} unit {suffix!r} in {value!r} "
            f"(accepted: {', '.join(sorted(table))})"
        )
    return float(number) * table[suffix]


def parse_length(value) -> float:
    return _parse(value, _LENGTH, "length")


def parse_time(value) -> float:
    return _parse(value, _TIME, "time")


def parse_frequency(value) -> float:
    return _parse(value, _FREQUENCY, "frequency")


def parse_resistance(value) -> float:
    return _parse(value, _RESISTANCE, "resistance")


def parse_capacitance(value) -> float:
    return _parse(value, _CAPACITANCE, "capacitance")


def parse_inductance(value) -> float:
    return _parse(value, _INDUCTANCE, "inductance")


def parse_area(value) -> float:
    return _parse(value, _AREA, "area")


def parse_resistivity(value) -> float:
    return _parse(value, _RESISTIVITY, "resistivity")


def parse_dimensionless(value) -> float:
    return _parse(value, _DIMENSIONLESS, "dimensionless")

"""YAML config documents with explicit unit suffixes.

One document format serves all subcommands; each command reads its own
block.  Unknown keys are rejected so typos fail loudly instead of being
silently ignored.  Numeric fields accept bare SI numbers or suffixed
strings ("0.508mm", "5.372GHz", "50mohm").
"""

from __future__ import annotations

from pathlib import Path

import yaml

from . import units
from .emnet.network import TransmissionLineSegment, ViaDiscontinuity
from .stackup import (DIELECTRIC, METAL, ChipWindow, Contact, CpwTrace, Layer,
                      LayerStack)


class ConfigError(ValueError):
    """Malformed config, with the offending location."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def load_config(path: str | Path) -> dict:
    try:
        doc = yaml.safe_load(Path(path).read_text())
    except yaml.YAMLError as exc:
        raise ConfigError(f"invalid YAML: {exc}", str(path)) from exc
    if doc is None:
        raise ConfigError("empty config document", str(path))
    if not isinstance(doc, dict):
        raise ConfigError("config root must be a mapping", str(path))
    return doc


def _require_keys(block: dict, allowed: set[str], required: set[str],
                  location: str) -> None:
    if not isinstance(block, dict):
        raise ConfigError("expected a mapping", location)
    extra = set(block) - allowed
    if extra:
        raise ConfigError(f"unknown keys: {sorted(extra)}", location)
    missing = required - set(block)
    if missing:
        raise ConfigError(f"missing keys: {sorted(missing)}", location)


def _parse(parse_fn, value, location: str) -> float:
    try:
        return parse_fn(value)
    except units.UnitError as exc:
        raise ConfigError(str(exc), location) from exc


def stackup_from_config(block: dict, location: str = "stackup") -> LayerStack:
    _require_keys(block, {"layers", "chip_window", "contacts"},
                  {"layers", "chip_window"}, location)
    layers = []
    for i, entry in enumerate(block["layers"]):
        loc = f"{location}.layers[{i}]"
        _require_keys(entry, {"name", "kind", "thickness", "resistivity",
                              "relative_permittivity"},
                      {"name", "kind", "thickness"}, loc)
        kind = entry["kind"]
        if kind not in (METAL, DIELECTRIC):
            raise ConfigError(f"kind must be metal or dielectric, got {kind!r}", loc)
        layers.append(Layer(
            name=str(entry["name"]), kind=kind,
            thickness=_parse(units.parse_length, entry["thickness"], loc),
            resistivity=_parse(units.parse_resistivity, entry["resistivity"], loc)
            if "resistivity" in entry else None,
            relative_permittivity=_parse(units.parse_dimensionless,
                                         entry["relative_permittivity"], loc)
            if "relative_permittivity" in entry else None))
    win_loc = f"{location}.chip_window"
    win = block["chip_window"]
    _require_keys(win, {"width", "height", "depth_layers"},
                  {"width", "height"}, win_loc)
    window = ChipWindow(
        width=_parse(units.parse_length, win["width"], win_loc),
        height=_parse(units.parse_length, win["height"], win_loc),
        depth_layers=frozenset(str(n) for n in win.get("depth_layers", [])))
    return LayerStack(layers=tuple(layers), chip_window=window)


def contacts_from_config(block: dict, location: str = "stackup") -> list[Contact]:
    contacts = []
    for i, entry in enumerate(block.get("contacts", [])):
        loc = f"{location}.contacts[{i}]"
        _require_keys(entry, {"area", "protrusion", "contact_resistance", "count"},
                      {"area", "contact_resistance"}, loc)
        n = int(entry.get("count", 1))
        contact = Contact(
            area=_parse(units.parse_area, entry["area"], loc),
            protrusion=_parse(units.parse_length, entry.get("protrusion", 0.0), loc),
            contact_resistance=_parse(units.parse_resistance,
                                      entry["contact_resistance"], loc))
        contacts.extend([contact] * n)
    return contacts


def trace_from_config(block: dict, location: str = "trace") -> CpwTrace:
    _require_keys(block, {"strip_width", "gap", "length", "metal_thickness",
                          "layer", "resistivity"},
                  {"strip_width", "gap", "length", "metal_thickness"}, location)
    return CpwTrace(
        strip_width=_parse(units.parse_length, block["strip_width"], location),
        gap=_parse(units.parse_length, block["gap"], location),
        length=_parse(units.parse_length, block["length"], location),
        metal_thickness=_parse(units.parse_length, block["metal_thickness"],
                               location),
        layer=str(block.get("layer", "L3")),
        resistivity=_parse(units.parse_resistivity,
                           block.get("resistivity", 0.0), location))


def chain_from_config(entries: list, location: str = "sweep.chain") -> list:
    """Chain elements: line / via / contact mappings, in order."""
    if not isinstance(entries, list) or not entries:
        raise ConfigError("chain must be a non-empty list", location)
    chain = []
    for i, entry in enumerate(entries):
        loc = f"{location}[{i}]"
        if not isinstance(entry, dict) or "element" not in entry:
            raise ConfigError("chain entry needs an 'element' key", loc)
        kind = entry["element"]
        if kind == "line":
            _require_keys(entry, {"element", "z0", "effective_permittivity",
                                  "length", "attenuation"},
                          {"element", "z0", "effective_permittivity", "length"},
                          loc)
            chain.append(TransmissionLineSegment(
                z0=_parse(units.parse_resistance, entry["z0"], loc),
                effective_permittivity=_parse(units.parse_dimensionless,
                                              entry["effective_permittivity"], loc),
                length=_parse(units.parse_length, entry["length"], loc),
                attenuation=_parse(units.parse_dimensionless,
                                   entry.get("attenuation", 0.0), loc)))
        elif kind == "via":
            _require_keys(entry, {"element", "series_inductance",
                                  "shunt_capacitance", "height"},
                          {"element", "series_inductance", "shunt_capacitance"},
                          loc)
            chain.append(ViaDiscontinuity(
                series_inductance=_parse(units.parse_inductance,
                                         entry["series_inductance"], loc),
                shunt_capacitance=_parse(units.parse_capacitance,
                                         entry["shunt_capacitance"], loc),
                height=_parse(units.parse_length, entry.get("height", 0.0), loc)))
        elif kind == "contact":
            _require_keys(entry, {"element", "area", "protrusion",
                                  "contact_resistance"},
                          {"element", "contact_resistance"}, loc)
            chain.append(Contact(
                area=_parse(units.parse_area, entry.get("area", 1e-6), loc),
                protrusion=_parse(units.parse_length,
                                  entry.get("protrusion", 0.0), loc),
                contact_resistance=_parse(units.parse_resistance,
                                          entry["contact_resistance"], loc)))
        else:
            raise ConfigError(f"unknown chain element {kind!r}", loc)
    return chain

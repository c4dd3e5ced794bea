"""Physical model of the multi-layer PCB package and its DC characterization.

The package is a stack of alternating metal and dielectric layers with a
chip-mounting window; buried CPW traces on an inner metal layer carry the
microwave lines, and via-fed contacts touch receptacles on the flipped chip.
DC checks here are plain resistive: strip resistance R = rho*l/S and a
lumped series contact resistance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

METAL = "metal"
DIELECTRIC = "dielectric"


@dataclass(frozen=True)
class Layer:
    """One PCB layer.  Metals carry a resistivity, dielectrics a permittivity.

    Construction is deliberately unchecked so that invalid stacks can be
    built and handed to :func:`validate_stackup`.
    """

    name: str
    kind: str  # METAL or DIELECTRIC
    thickness: float  # m
    resistivity: float | None = None  # ohm*m, metals only
    relative_permittivity: float | None = None  # dielectrics only


@dataclass(frozen=True)
class ChipWindow:
    width: float  # m
    height: float  # m
    depth_layers: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "depth_layers", frozenset(self.depth_layers))


@dataclass(frozen=True)
class LayerStack:
    layers: tuple[Layer, ...]
    chip_window: ChipWindow | None = None

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))

    def metals(self) -> tuple[Layer, ...]:
        return tuple(l for l in self.layers if l.kind == METAL)

    def dielectrics(self) -> tuple[Layer, ...]:
        return tuple(l for l in self.layers if l.kind == DIELECTRIC)


@dataclass(frozen=True)
class CpwTrace:
    """A buried CPW strip: center-strip geometry plus metal resistivity."""

    strip_width: float  # m
    gap: float  # m
    length: float  # m
    metal_thickness: float  # m
    layer: str = "L3"
    resistivity: float = 0.0  # ohm*m

    def __post_init__(self):
        if self.strip_width <= 0 or self.metal_thickness <= 0 or self.gap <= 0:
            raise ValueError("CPW cross-section dimensions must be positive")
        if self.length < 0:
            raise ValueError("CPW length must be non-negative")
        if self.resistivity < 0:
            raise ValueError("resistivity must be non-negative")

    @property
    def cross_section(self) -> float:
        """Strip cross-section area S = w * t in m^2."""
        return self.strip_width * self.metal_thickness


@dataclass(frozen=True)
class Contact:
    """A via-fed contact pad, modeled at DC as a lumped series resistor."""

    area: float  # m^2
    protrusion: float  # m above the dielectric surface
    contact_resistance: float  # ohm

    def __post_init__(self):
        if self.area <= 0:
            raise ValueError("contact area must be positive")
        if self.protrusion < 0 or self.contact_resistance < 0:
            raise ValueError("protrusion and contact resistance must be non-negative")


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "violations", tuple(self.violations))

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "\n".join(f"- {v}" for v in self.violations)


def validate_stackup(stack: LayerStack) -> ValidationReport:
    """Check the structural rules of a PCB stack.

    An empty violation list means the stack is valid.  All problems are
    report entries; nothing raises.
    """
    violations: list[str] = []
    if not stack.layers:
        violations.append("empty stack")
        return ValidationReport(tuple(violations))

    names = [l.name for l in stack.layers]
    seen: set[str] = set()
    for n in names:
        if n in seen:
            violations.append(f"duplicate layer name: {n}")
        seen.add(n)

    for prev, cur in zip(stack.layers, stack.layers[1:]):
        if prev.kind == cur.kind:
            violations.append(f"non-alternating layers: {prev.name}/{cur.name}")

    for l in stack.layers:
        if l.kind not in (METAL, DIELECTRIC):
            violations.append(f"unknown layer kind: {l.name} ({l.kind})")
            continue
        if l.thickness <= 0:
            violations.append(f"non-positive thickness: {l.name}")
        if l.kind == METAL:
            if l.resistivity is None or l.resistivity <= 0:
                violations.append(f"metal without positive resistivity: {l.name}")
        else:
            if l.relative_permittivity is None or l.relative_permittivity < 1:
                violations.append(f"dielectric with permittivity < 1: {l.name}")

    if stack.chip_window is None:
        violations.append("missing chip window")
    else:
        w = stack.chip_window
        if w.width <= 0 or w.height <= 0:
            violations.append("non-positive window dimension")
        for depth in sorted(w.depth_layers):
            if depth not in seen:
                violations.append(f"window depth layer unknown: {depth}")

    return ValidationReport(tuple(violations))


def dc_resistance(trace: CpwTrace) -> float:
    """Series resistance of the strip: R = rho * l / (w * t)."""
    return trace.resistivity * trace.length / trace.cross_section


def resistivity_from_measurement(resistance: float, trace: CpwTrace) -> float:
    """Invert the strip resistance: rho = R * S / l."""
    if resistance < 0:
        raise ValueError("measured resistance must be non-negative")
    if trace.length == 0:
        raise ValueError("cannot infer resistivity from a zero-length trace")
    return resistance * trace.cross_section / trace.length


def series_path_resistance(trace: CpwTrace, *contacts: Contact) -> float:
    """DC resistance of a signal path: strip plus lumped contacts in series."""
    return dc_resistance(trace) + sum(c.contact_resistance for c in contacts)

"""Two-port network algebra on a shared frequency grid.

Networks are stored as per-frequency 2x2 scattering matrices referenced to
a single real impedance.  Elements (lines, vias, lumped resistors) are
built through their ABCD chain matrices and converted; cascading multiplies
the ABCD matrices in order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..stackup import Contact

C_LIGHT = 299792458.0  # m/s
DB_FLOOR = -200.0  # reporting floor for 20*log10|S21|


class GridMismatchError(ValueError):
    """Networks on different grids or references cannot be combined."""


@dataclass(frozen=True)
class FrequencyGrid:
    """Strictly increasing, positive frequency samples in Hz."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 1 or pts.size == 0:
            raise ValueError("frequency grid must be a non-empty 1D array")
        if pts[0] <= 0 or np.any(np.diff(pts) <= 0):
            raise ValueError("frequencies must be positive and strictly increasing")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.size

    def __eq__(self, other) -> bool:
        return isinstance(other, FrequencyGrid) and \
            self.points.shape == other.points.shape and \
            bool(np.all(self.points == other.points))

    @classmethod
    def linear(cls, f_start: float, f_stop: float, n: int) -> "FrequencyGrid":
        return cls(np.linspace(f_start, f_stop, n))


@dataclass(frozen=True)
class TransmissionLineSegment:
    """Uniform line: impedance, effective permittivity, length, loss."""

    z0: float  # ohm
    effective_permittivity: float
    length: float  # m
    attenuation: float = 0.0  # Np/m

    def __post_init__(self):
        if self.z0 <= 0:
            raise ValueError("line impedance must be positive")
        if self.effective_permittivity < 1:
            raise ValueError("effective permittivity must be >= 1")
        if self.length < 0 or self.attenuation < 0:
            raise ValueError("length and attenuation must be non-negative")


@dataclass(frozen=True)
class ViaDiscontinuity:
    """Vertical via as a lumped series-L / shunt-C discontinuity."""

    series_inductance: float  # H
    shunt_capacitance: float  # F
    height: float = 0.0  # m, descriptive only

    def __post_init__(self):
        if min(self.series_inductance, self.shunt_capacitance, self.height) < 0:
            raise ValueError("via parameters must be non-negative")


class TwoPortNetwork:
    """Frequency-sampled 2x2 scattering matrices at one real reference."""

    def __init__(self, grid: FrequencyGrid, s: np.ndarray,
                 reference_impedance: float = 50.0):
        s = np.asarray(s, dtype=complex)
        if s.shape != (len(grid), 2, 2):
            raise ValueError(f"expected S of shape ({len(grid)}, 2, 2), got {s.shape}")
        if reference_impedance <= 0:
            raise ValueError("reference impedance must be positive")
        self.grid = grid
        self.s = s
        self.s.setflags(write=False)
        self.reference_impedance = float(reference_impedance)

    @property
    def s11(self) -> np.ndarray:
        return self.s[:, 0, 0]

    @property
    def s21(self) -> np.ndarray:
        return self.s[:, 1, 0]

    @property
    def s12(self) -> np.ndarray:
        return self.s[:, 0, 1]

    @property
    def s22(self) -> np.ndarray:
        return self.s[:, 1, 1]

    def s21_db(self) -> np.ndarray:
        return to_db(self.s21)

    def to_abcd(self) -> np.ndarray:
        return s_to_abcd(self.s, self.reference_impedance)

    @classmethod
    def from_abcd(cls, grid: FrequencyGrid, abcd: np.ndarray,
                  reference_impedance: float = 50.0) -> "TwoPortNetwork":
        return cls(grid, abcd_to_s(abcd, reference_impedance), reference_impedance)

    def reciprocity_error(self) -> float:
        """max |S12 - S21| over the grid."""
        return float(np.max(np.abs(self.s[:, 0, 1] - self.s[:, 1, 0])))

    def passivity_margin(self) -> float:
        """Largest singular value of S over the grid (<= 1 for passive)."""
        return float(np.max(np.linalg.svd(self.s, compute_uv=False)))

    def _compatible(self, other: "TwoPortNetwork") -> None:
        if self.grid != other.grid:
            raise GridMismatchError("networks live on different frequency grids")
        if self.reference_impedance != other.reference_impedance:
            raise GridMismatchError("networks use different reference impedances")


def to_db(s21: np.ndarray) -> np.ndarray:
    """20*log10 |S21| with a floor at DB_FLOOR instead of -inf."""
    mag = np.abs(np.asarray(s21))
    floor_mag = 10.0 ** (DB_FLOOR / 20.0)
    return 20.0 * np.log10(np.maximum(mag, floor_mag))


def abcd_to_s(abcd: np.ndarray, z0: float) -> np.ndarray:
    """Chain (ABCD) to scattering, real reference z0 at both ports."""
    abcd = np.asarray(abcd, dtype=complex)
    a = abcd[..., 0, 0]
    b = abcd[..., 0, 1]
    c = abcd[..., 1, 0]
    d = abcd[..., 1, 1]
    den = a + b / z0 + c * z0 + d
    s = np.empty(abcd.shape, dtype=complex)
    s[..., 0, 0] = (a + b / z0 - c * z0 - d) / den
    s[..., 0, 1] = 2.0 * (a * d - b * c) / den
    s[..., 1, 0] = 2.0 / den
    s[..., 1, 1] = (-a + b / z0 - c * z0 + d) / den
    return s


def s_to_abcd(s: np.ndarray, z0: float) -> np.ndarray:
    """Scattering to chain (ABCD), real reference z0 at both ports."""
    s = np.asarray(s, dtype=complex)
    s11 = s[..., 0, 0]
    s12 = s[..., 0, 1]
    s21 = s[..., 1, 0]
    s22 = s[..., 1, 1]
    den = 2.0 * s21
    abcd = np.empty(s.shape, dtype=complex)
    abcd[..., 0, 0] = ((1 + s11) * (1 - s22) + s12 * s21) / den
    abcd[..., 0, 1] = z0 * ((1 + s11) * (1 + s22) - s12 * s21) / den
    abcd[..., 1, 0] = ((1 - s11) * (1 - s22) - s12 * s21) / (z0 * den)
    abcd[..., 1, 1] = ((1 - s11) * (1 + s22) + s12 * s21) / den
    return abcd


def identity_network(grid: FrequencyGrid, reference_z0: float = 50.0) -> TwoPortNetwork:
    s = np.zeros((len(grid), 2, 2), dtype=complex)
    s[:, 0, 1] = 1.0
    s[:, 1, 0] = 1.0
    return TwoPortNetwork(grid, s, reference_z0)


def line_network(seg: TransmissionLineSegment, grid: FrequencyGrid,
                 reference_z0: float = 50.0) -> TwoPortNetwork:
    """Lossy line ABCD: cosh/sinh of gamma*l, gamma = alpha + i*beta."""
    f = grid.points
    beta = 2.0 * np.pi * f * np.sqrt(seg.effective_permittivity) / C_LIGHT
    gl = (seg.attenuation + 1j * beta) * seg.length
    abcd = np.empty((len(grid), 2, 2), dtype=complex)
    abcd[:, 0, 0] = np.cosh(gl)
    abcd[:, 0, 1] = seg.z0 * np.sinh(gl)
    abcd[:, 1, 0] = np.sinh(gl) / seg.z0
    abcd[:, 1, 1] = np.cosh(gl)
    return TwoPortNetwork.from_abcd(grid, abcd, reference_z0)


def via_network(via: ViaDiscontinuity, grid: FrequencyGrid,
                reference_z0: float = 50.0) -> TwoPortNetwork:
    """Series-L followed by shunt-C: ABCD = [[1+ZY, Z], [Y, 1]]."""
    w = 2.0 * np.pi * grid.points
    z = 1j * w * via.series_inductance
    y = 1j * w * via.shunt_capacitance
    abcd = np.empty((len(grid), 2, 2), dtype=complex)
    abcd[:, 0, 0] = 1.0 + z * y
    abcd[:, 0, 1] = z
    abcd[:, 1, 0] = y
    abcd[:, 1, 1] = 1.0
    return TwoPortNetwork.from_abcd(grid, abcd, reference_z0)


def series_resistor_network(resistance: float, grid: FrequencyGrid,
                            reference_z0: float = 50.0) -> TwoPortNetwork:
    """Lumped series resistor (the DC contact model at RF)."""
    if resistance < 0:
        raise ValueError("resistance must be non-negative")
    abcd = np.zeros((len(grid), 2, 2), dtype=complex)
    abcd[:, 0, 0] = 1.0
    abcd[:, 0, 1] = resistance
    abcd[:, 1, 1] = 1.0
    return TwoPortNetwork.from_abcd(grid, abcd, reference_z0)


def cascade(networks: list[TwoPortNetwork]) -> TwoPortNetwork:
    """Multiply the chain matrices in order and convert back to S."""
    if not networks:
        raise ValueError("cascade needs at least one network")
    first = networks[0]
    for net in networks[1:]:
        first._compatible(net)
    abcd = networks[0].to_abcd()
    for net in networks[1:]:
        abcd = abcd @ net.to_abcd()
    return TwoPortNetwork.from_abcd(first.grid, abcd, first.reference_impedance)


def as_network(element, grid: FrequencyGrid,
               reference_z0: float = 50.0) -> TwoPortNetwork:
    """Coerce a chain element to a TwoPortNetwork on the given grid."""
    if isinstance(element, TwoPortNetwork):
        if element.grid != grid or element.reference_impedance != reference_z0:
            raise GridMismatchError("chain network has incompatible grid/reference")
        return element
    if isinstance(element, TransmissionLineSegment):
        return line_network(element, grid, reference_z0)
    if isinstance(element, ViaDiscontinuity):
        return via_network(element, grid, reference_z0)
    if isinstance(element, Contact):
        return series_resistor_network(element.contact_resistance, grid, reference_z0)
    raise TypeError(f"cannot interpret {type(element).__name__} as a network element")


def sweep_s21(chain: list, grid: FrequencyGrid,
              reference_z0: float = 50.0) -> np.ndarray:
    """Complex S21 of the cascaded chain at each grid point."""
    nets = [as_network(e, grid, reference_z0) for e in chain]
    return cascade(nets).s21

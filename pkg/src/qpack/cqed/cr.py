"""Cross-resonance conditional dynamics and CNOT pulse-length calibration.

Driving the control qubit at the target's frequency makes the target Rabi
rate depend on the control state.  The effective model keeps only the
unconditional (IX) and conditional (ZX) rates:

    omega_0 = ix_rate -/+ zx_rate/2      (control in |0>)
    omega_1 = ix_rate +/- zx_rate/2      (control in |1>)

with the default sign convention giving control |0> the slower rate.  The
target population is a damped cosine with a control-state-dependent
coherence time.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

import numpy as np

from .rabi import QubitSpec, RabiTrace

CONTRAST_THRESHOLD = 0.5
_SCAN_STEP = 1e-9  # s
_REFINE_TOL = 1e-10  # s

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class CalibrationError(RuntimeError):
    """No pulse length reached the contrast threshold."""

    def __init__(self, message: str, gate_time: float, contrast: float):
        super().__init__(message)
        self.gate_time = gate_time
        self.contrast = contrast


@dataclass(frozen=True)
class TwoQubitSystem:
    control: QubitSpec
    target: QubitSpec
    zx_rate: float  # Hz
    ix_rate: float  # Hz
    target_t2_control0: float  # s, target coherence with control in |0>
    target_t2_control1: float  # s
    control_zero_slower: bool = True

    def __post_init__(self):
        if self.zx_rate < 0 or self.ix_rate < 0:
            raise ValueError("interaction rates must be non-negative")
        if self.target_t2_control0 <= 0 or self.target_t2_control1 <= 0:
            raise ValueError("state-dependent coherence times must be positive")

    def conditional_rates(self) -> tuple[float, float]:
        """(omega_0, omega_1): target rotation rate per control state."""
        half = 0.5 * self.zx_rate
        if self.control_zero_slower:
            return self.ix_rate - half, self.ix_rate + half
        return self.ix_rate + half, self.ix_rate - half

    def target_coherence(self, control_state: int) -> float:
        return self.target_t2_control0 if control_state == 0 \
            else self.target_t2_control1


def cr_population(system: TwoQubitSystem, control_state: int,
                  t: np.ndarray) -> np.ndarray:
    """Closed-form damped-cosine target population."""
    if control_state not in (0, 1):
        raise ValueError("control state must be 0 or 1")
    omega = system.conditional_rates()[control_state]
    tau = system.target_coherence(control_state)
    t = np.asarray(t, dtype=float)
    return 0.5 * (1.0 - np.exp(-t / tau) * np.cos(2.0 * np.pi * omega * t))


def simulate_cr(system: TwoQubitSystem, control_state: int,
                times: np.ndarray) -> RabiTrace:
    """Target-qubit population trace for the given control state."""
    t = np.asarray(times, dtype=float)
    return RabiTrace(times=t, excited_population=cr_population(
        system, control_state, t))


@dataclass(frozen=True)
class CnotCalibration:
    gate_time: float  # s
    contrast: float


def _contrast(system: TwoQubitSystem, t) -> np.ndarray:
    return np.abs(cr_population(system, 1, t) - cr_population(system, 0, t))


def calibrate_cnot(system: TwoQubitSystem, t_max: float) -> CnotCalibration:
    """Smallest pulse length maximizing the conditional population contrast.

    Grid scan at 1 ns, then golden-section refinement to 0.1 ns around the
    best grid point.  Raises CalibrationError (carrying the best candidate)
    when the peak contrast stays below 0.5.
    """
    if system.zx_rate <= 0:
        raise CalibrationError("zx_rate is zero: no conditional dynamics",
                               gate_time=0.0, contrast=0.0)
    if t_max <= 0:
        raise ValueError("t_max must be positive")

    grid = np.arange(0.0, t_max + 0.5 * _SCAN_STEP, _SCAN_STEP)
    contrast = _contrast(system, grid)
    i_best = int(np.argmax(contrast))

    lo = max(grid[i_best] - _SCAN_STEP, 0.0)
    hi = min(grid[i_best] + _SCAN_STEP, t_max)
    t_best = _golden_max(lambda t: float(_contrast(system, np.array([t]))[0]),
                         lo, hi)
    c_best = float(_contrast(system, np.array([t_best]))[0])
    if c_best < CONTRAST_THRESHOLD:
        raise CalibrationError(
            f"peak contrast {c_best:.3f} below threshold {CONTRAST_THRESHOLD}",
            gate_time=t_best, contrast=c_best)
    return CnotCalibration(gate_time=t_best, contrast=c_best)


def _golden_max(fn, lo: float, hi: float) -> float:
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > _REFINE_TOL:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = fn(d)
    return 0.5 * (a + b)

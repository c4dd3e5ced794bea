"""Fixed-step RK4 integration for the master-equation simulations.

Deterministic by construction: no adaptive step-size control, so results
are bit-identical across runs and independent of evaluation order.
"""

from __future__ import annotations

from typing import Callable

import numpy as np


def rk4_span(deriv: Callable[[float, np.ndarray], np.ndarray], y0: np.ndarray,
             t0: float, t1: float, dt_max: float) -> np.ndarray:
    """Integrate y' = deriv(t, y) from t0 to t1 with uniform RK4 steps.

    The actual step is t-span divided into ceil(span/dt_max) equal pieces,
    which keeps the step at or below dt_max and lands exactly on t1.
    """
    span = t1 - t0
    if span < 0:
        raise ValueError("t1 must be >= t0")
    y = np.array(y0, copy=True)
    if span == 0:
        return y
    n = max(int(np.ceil(span / dt_max)), 1)
    dt = span / n
    t = t0
    for _ in range(n):
        k1 = deriv(t, y)
        k2 = deriv(t + 0.5 * dt, y + 0.5 * dt * k1)
        k3 = deriv(t + 0.5 * dt, y + 0.5 * dt * k2)
        k4 = deriv(t + dt, y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t += dt
    return y

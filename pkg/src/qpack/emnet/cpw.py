"""Characteristic impedance of a fully embedded CPW and inverse gap design.

The conformal-mapping result for a CPW in a homogeneous dielectric is

    Z0 = (30*pi / sqrt(er)) * K(k') / K(k),   k = w / (w + 2*s)

A buried CPW sandwiched between two identical dielectric layers (grounds
outside) is close to this homogeneous-embedding limit, so eps_eff = er.
Finite ground spacing corrections are deliberately not modeled.
"""

from __future__ import annotations

import math

from .elliptic import elliptic_k

GAP_MIN = 1e-6  # m, bracket for gap solving
GAP_MAX = 1e-2


class NoSolutionError(ValueError):
    """The requested impedance is not achievable within the gap bracket."""


def cpw_char_impedance(strip_width: float, gap: float,
                       relative_permittivity: float) -> float:
    """Z0 of an embedded CPW (eps_eff = er) in ohms."""
    if strip_width <= 0 or gap <= 0:
        raise ValueError("strip width and gap must be positive")
    if relative_permittivity < 1:
        raise ValueError("relative permittivity must be >= 1")
    k = strip_width / (strip_width + 2.0 * gap)
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return 30.0 * math.pi / math.sqrt(relative_permittivity) \
        * elliptic_k(kp) / elliptic_k(k)


def solve_gap_for_impedance(strip_width: float, relative_permittivity: float,
                            target_z0: float, tol: float = 0.01) -> float:
    """Find the gap giving |Z0(gap) - target| < tol by bisection.

    Z0 is strictly increasing in the gap, so a plain bisection over
    [GAP_MIN, GAP_MAX] suffices once the target is inside the bracket.
    """
    if target_z0 <= 0:
        raise NoSolutionError("target impedance must be positive")
    lo, hi = GAP_MIN, GAP_MAX
    z_lo = cpw_char_impedance(strip_width, lo, relative_permittivity)
    z_hi = cpw_char_impedance(strip_width, hi, relative_permittivity)
    if not z_lo <= target_z0 <= z_hi:
        raise NoSolutionError(
            f"target {target_z0} ohm outside achievable range "
            f"[{z_lo:.3f}, {z_hi:.3f}] ohm for this width/permittivity"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        z_mid = cpw_char_impedance(strip_width, mid, relative_permittivity)
        if abs(z_mid - target_z0) < tol:
            return mid
        if z_mid < target_z0:
            lo = mid
        else:
            hi = mid
    raise NoSolutionError("gap bisection did not converge")

"""Resonant modes of the rectangular enclosure around the chip.

f(m,n,p) = c / (2*sqrt(er)) * sqrt((m/a)^2 + (n/b)^2 + (p/d)^2), where a
mode exists when at least two of the three indices are nonzero.  The
package sanity rule is that the lowest mode stays above the 3-8 GHz band
used by qubits, readout resonators, and couplers.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

from .network import C_LIGHT


@dataclass(frozen=True)
class CavityBox:
    a: float  # m
    b: float  # m
    d: float  # m
    relative_permittivity: float = 1.0

    def __post_init__(self):
        if min(self.a, self.b, self.d) <= 0:
            raise ValueError("cavity dimensions must be positive")
        if self.relative_permittivity < 1:
            raise ValueError("relative permittivity must be >= 1")


@dataclass(frozen=True)
class CavityMode:
    indices: tuple[int, int, int]
    frequency: float  # Hz


def mode_frequency(box: CavityBox, m: int, n: int, p: int) -> float:
    return C_LIGHT / (2.0 * math.sqrt(box.relative_permittivity)) * math.sqrt(
        (m / box.a) ** 2 + (n / box.b) ** 2 + (p / box.d) ** 2
    )


def cavity_modes(box: CavityBox, count: int) -> list[CavityMode]:
    """The `count` lowest valid modes, ascending in frequency.

    The index bound grows until every remaining triple is provably above
    the current count-th candidate: any triple with an index > N is at
    least f(N+1 on the largest dimension, 0, 0).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    n_max = 3
    while True:
        modes = []
        for m in range(n_max + 1):
            for n in range(n_max + 1):
                for p in range(n_max + 1):
                    if (m > 0) + (n > 0) + (p > 0) >= 2:
                        modes.append(CavityMode((m, n, p), mode_frequency(box, m, n, p)))
        modes.sort(key=lambda md: (md.frequency, md.indices))
        if len(modes) >= count:
            f_escape = C_LIGHT / (2.0 * math.sqrt(box.relative_permittivity)) \
                * (n_max + 1) / max(box.a, box.b, box.d)
            if modes[count - 1].frequency <= f_escape:
                return modes[:count]
        n_max *= 2

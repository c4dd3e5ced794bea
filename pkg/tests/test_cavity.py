import itertools
import math

import numpy as np
import pytest

from qpack.emnet import C_LIGHT, CavityBox, cavity_modes, mode_frequency


def brute_force_modes(box, count, n_max=10):
    modes = []
    for m, n, p in itertools.product(range(n_max + 1), repeat=3):
        if (m > 0) + (n > 0) + (p > 0) >= 2:
            f = C_LIGHT / (2 * math.sqrt(box.relative_permittivity)) * math.sqrt(
                (m / box.a) ** 2 + (n / box.b) ** 2 + (p / box.d) ** 2)
            modes.append(((m, n, p), f))
    modes.sort(key=lambda t: (t[1], t[0]))
    return modes[:count]


def test_package_window_lowest_mode():
    box = CavityBox(a=16.2e-3, b=16.2e-3, d=2e-3)
    modes = cavity_modes(box, 1)
    assert modes[0].indices == (1, 1, 0)
    analytic = C_LIGHT / 2 * math.sqrt(2) / 16.2e-3
    assert modes[0].frequency == pytest.approx(analytic, rel=1e-3)
    assert modes[0].frequency == pytest.approx(13.0855e9, rel=1e-3)
    assert modes[0].frequency > 10e9


def test_cube_degeneracy():
    box = CavityBox(a=0.03, b=0.03, d=0.03)
    modes = cavity_modes(box, 3)
    freqs = [m.frequency for m in modes]
    assert freqs[0] == pytest.approx(freqs[1], rel=1e-12)
    assert freqs[1] == pytest.approx(freqs[2], rel=1e-12)


def test_permittivity_scaling():
    vacuum = cavity_modes(CavityBox(0.02, 0.015, 0.004), 6)
    filled = cavity_modes(CavityBox(0.02, 0.015, 0.004,
                                    relative_permittivity=4.0), 6)
    for mv, mf in zip(vacuum, filled):
        assert mf.indices == mv.indices
        assert mf.frequency == pytest.approx(mv.frequency / 2.0, rel=1e-12)


def test_output_sorted_and_deterministic():
    box = CavityBox(a=16.2e-3, b=16.2e-3, d=2e-3)
    a = cavity_modes(box, 10)
    b = cavity_modes(box, 10)
    assert a == b
    freqs = [m.frequency for m in a]
    assert freqs == sorted(freqs)


def test_against_brute_force_on_random_boxes():
    rng = np.random.default_rng(99)
    for _ in range(100):
        dims = rng.uniform(5e-3, 30e-3, size=3)
        er = rng.uniform(1.0, 10.0)
        box = CavityBox(a=dims[0], b=dims[1], d=dims[2],
                        relative_permittivity=er)
        ours = cavity_modes(box, 8)
        ref = brute_force_modes(box, 8)
        for mode, (indices, freq) in zip(ours, ref):
            assert mode.indices == indices
            assert mode.frequency == pytest.approx(freq, rel=1e-12)


def test_single_index_modes_excluded():
    box = CavityBox(a=0.05, b=0.004, d=0.004)
    modes = cavity_modes(box, 20)
    for m in modes:
        assert sum(1 for i in m.indices if i > 0) >= 2


def test_mode_frequency_formula():
    box = CavityBox(a=0.01, b=0.02, d=0.03, relative_permittivity=2.25)
    f = mode_frequency(box, 2, 1, 3)
    expected = C_LIGHT / (2 * 1.5) * math.sqrt((2 / 0.01) ** 2
                                               + (1 / 0.02) ** 2
                                               + (3 / 0.03) ** 2)
    assert f == pytest.approx(expected, rel=1e-14)

"""CSV formats exchanged with external tooling.

All numeric columns use repr-style shortest round-trip decimal formatting
so that re-reading a file reproduces the IEEE-754 values exactly.
"""

from __future__ import annotations

import csv
import io

import numpy as np

from .emnet.network import FrequencyGrid, to_db

SWEEP_HEADER = ["freq_hz", "s21_re", "s21_im", "s21_db"]
TRACE_IN_HEADER = ["freq_hz", "s21_re", "s21_im"]
POPULATION_HEADER = ["time_s", "population"]


def _fmt(x: float) -> str:
    return repr(float(x))


def format_sweep_csv(grid: FrequencyGrid, s21: np.ndarray) -> str:
    db = to_db(s21)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_HEADER)
    for f, s, d in zip(grid.points, s21, db):
        w.writerow([_fmt(f), _fmt(s.real), _fmt(s.imag), _fmt(d)])
    return buf.getvalue()


def format_trace_csv(grid: FrequencyGrid, s21: np.ndarray) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TRACE_IN_HEADER)
    for f, s in zip(grid.points, s21):
        w.writerow([_fmt(f), _fmt(s.real), _fmt(s.imag)])
    return buf.getvalue()


def parse_trace_csv(text: str) -> tuple[FrequencyGrid, np.ndarray]:
    """Read `freq_hz,s21_re,s21_im` (the s21_db column is ignored if present)."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0][:3]] != TRACE_IN_HEADER:
        raise ValueError(f"expected header {','.join(TRACE_IN_HEADER)}")
    freqs, vals = [], []
    for row in rows[1:]:
        if not row:
            continue
        freqs.append(float(row[0]))
        vals.append(complex(float(row[1]), float(row[2])))
    return FrequencyGrid(np.array(freqs)), np.array(vals)


def format_population_csv(times: np.ndarray, populations: np.ndarray) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(POPULATION_HEADER)
    for t, p in zip(times, populations):
        w.writerow([_fmt(t), _fmt(p)])
    return buf.getvalue()


def parse_population_csv(text: str) -> tuple[np.ndarray, np.ndarray]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0][:2]] != POPULATION_HEADER:
        raise ValueError(f"expected header {','.join(POPULATION_HEADER)}")
    times, pops = [], []
    for row in rows[1:]:
        if not row:
            continue
        times.append(float(row[0]))
        pops.append(float(row[1]))
    return np.array(times), np.array(pops)

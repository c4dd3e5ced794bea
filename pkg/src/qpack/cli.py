"""Command-line front end.

Every paper-scenario check is reachable both as a focused subcommand and
through `reproduce <scenario>`.  Reports go to stdout as small tables;
`--json` writes the same content machine-readably, `--out` writes CSV
sweeps/traces.  Exit codes: 0 success, 1 validation/fit failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import csvio, presets, units
from .config import ConfigError, chain_from_config, load_config, \
    stackup_from_config, trace_from_config
from .cqed import (CalibrationError, DriveSpec, QubitSpec, TwoQubitSystem,
                   average_gate_fidelity, calibrate_cnot, cnot_unitary,
                   fit_rabi, not_unitary, simulate_cnot_process, simulate_cr,
                   simulate_not_process, simulate_rabi)
from .cqed.rabi import RabiTrace
from .emnet import (CavityBox, CoupledPair, FrequencyGrid, NoSolutionError,
                    cavity_modes, cpw_char_impedance, crosstalk_s21,
                    solve_gap_for_impedance, sweep_s21)
from .lattice import (LayoutParseError, build_layout, export_netlist,
                      nju13_layout, validate_layout)
from .optimize import FitError
from .resonator import NotchResonanceModel, fit_resonance, model_s21
from .stackup import (Contact, dc_resistance, resistivity_from_measurement,
                      series_path_resistance, validate_stackup)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

DEFAULT_SEED = 1234


def _unit_arg(parse_fn):
    def convert(text: str):
        try:
            return parse_fn(text)
        except units.UnitError as exc:
            raise argparse.ArgumentTypeError(str(exc))
    return convert


_length = _unit_arg(units.parse_length)
_freq = _unit_arg(units.parse_frequency)
_time = _unit_arg(units.parse_time)
_res = _unit_arg(units.parse_resistance)
_number = _unit_arg(units.parse_dimensionless)


def _write_json(path: str | None, payload: dict) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _write_text(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def _print_table(rows: list[tuple[str, str]]) -> None:
    width = max(len(k) for k, _ in rows)
    for key, val in rows:
        print(f"{key:<{width}}  {val}")


def _band_grid(args) -> FrequencyGrid:
    return FrequencyGrid.linear(args.fmin, args.fmax, args.points)


# ------------------------------------------------------------------ commands

def cmd_stackup_check(args) -> int:
    if args.config:
        doc = load_config(args.config)
        if "stackup" not in doc:
            raise ConfigError("missing 'stackup' block", str(args.config))
        stack = stackup_from_config(doc["stackup"])
    else:
        stack = presets.nju13_stackup()
    report = validate_stackup(stack)
    _print_table([("stackup", "preset nju13" if not args.config else args.config),
                  ("layers", str(len(stack.layers))),
                  ("valid", str(report.ok))])
    for violation in report.violations:
        print(f"violation: {violation}")
    _write_json(args.json, {"valid": report.ok,
                            "violations": list(report.violations)})
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_dc(args) -> int:
    if args.config:
        doc = load_config(args.config)
        if "trace" not in doc:
            raise ConfigError("missing 'trace' block", str(args.config))
        trace = trace_from_config(doc["trace"])
    else:
        trace = presets.nju13_trace()
    r_strip = dc_resistance(trace)
    rows = [("strip resistance", f"{r_strip:.6g} ohm")]
    payload = {"strip_resistance_ohm": r_strip}
    if args.measured_r is not None:
        rho = resistivity_from_measurement(args.measured_r, trace)
        rows.append(("resistivity from measurement", f"{rho:.6g} ohm*m"))
        payload["resistivity_ohm_m"] = rho
    if args.contact_resistance is not None:
        contact = Contact(area=presets.CONTACT_AREA,
                          protrusion=presets.CONTACT_PROTRUSION,
                          contact_resistance=args.contact_resistance)
        r_path = series_path_resistance(trace, contact)
        rows.append(("series path resistance", f"{r_path:.6g} ohm"))
        payload["series_path_resistance_ohm"] = r_path
    _print_table(rows)
    _write_json(args.json, payload)
    return EXIT_OK


def cmd_cpw(args) -> int:
    if args.solve_gap:
        gap = solve_gap_for_impedance(args.w, args.er, args.z0)
        z0 = cpw_char_impedance(args.w, gap, args.er)
        _print_table([("strip width", f"{args.w * 1e3:.4g} mm"),
                      ("target impedance", f"{args.z0:.4g} ohm"),
                      ("solved gap", f"{gap * 1e3:.6g} mm"),
                      ("impedance at gap", f"{z0:.6g} ohm")])
        _write_json(args.json, {"gap_m": gap, "impedance_ohm": z0})
        return EXIT_OK
    if args.gap is None:
        raise ConfigError("need --gap (or --solve-gap with --z0)", "cpw")
    z0 = cpw_char_impedance(args.w, args.gap, args.er)
    _print_table([("impedance", f"{z0:.6g} ohm")])
    _write_json(args.json, {"impedance_ohm": z0})
    return EXIT_OK


def cmd_cavity_modes(args) -> int:
    box = CavityBox(a=args.a, b=args.b, d=args.d,
                    relative_permittivity=args.er)
    modes = cavity_modes(box, args.count)
    for mode in modes:
        m, n, p = mode.indices
        print(f"({m},{n},{p})  {mode.frequency / 1e9:.6f} GHz")
    _write_json(args.json, {"modes": [
        {"indices": list(mode.indices), "frequency_hz": mode.frequency}
        for mode in modes]})
    return EXIT_OK


def cmd_sweep(args) -> int:
    grid = _band_grid(args)
    if args.config:
        doc = load_config(args.config)
        if "sweep" not in doc or "chain" not in doc["sweep"]:
            raise ConfigError("missing 'sweep.chain' block", str(args.config))
        chain = chain_from_config(doc["sweep"]["chain"])
    else:
        chain = presets.nju13_chain()
    s21 = sweep_s21(chain, grid)
    db = 20.0 * np.log10(np.maximum(np.abs(s21), 1e-10))
    _print_table([("points", str(len(grid))),
                  ("band", f"{grid.points[0] / 1e9:g}-{grid.points[-1] / 1e9:g} GHz"),
                  ("max |S21| dip", f"{-float(np.min(db)):.4f} dB"),
                  ("worst ripple", f"{float(np.max(db) - np.min(db)):.4f} dB")])
    _write_text(args.out, csvio.format_sweep_csv(grid, s21))
    _write_json(args.json, {"max_dip_db": -float(np.min(db))})
    return EXIT_OK


def cmd_xtalk(args) -> int:
    grid = _band_grid(args)
    pair = CoupledPair.preset(args.preset)
    if args.coupling is not None:
        pair = CoupledPair(pair.line, args.coupling, args.preset)
    db = crosstalk_s21(pair, grid)
    _print_table([("preset", args.preset),
                  ("coupling coefficient", f"{pair.coupling_coefficient:g}"),
                  ("band", f"{grid.points[0] / 1e9:g}-{grid.points[-1] / 1e9:g} GHz"),
                  ("crosstalk min", f"{float(np.min(db)):.2f} dB"),
                  ("crosstalk max", f"{float(np.max(db)):.2f} dB")])
    if args.out:
        mag = 10.0 ** (db / 20.0)
        _write_text(args.out, csvio.format_sweep_csv(grid, mag.astype(complex)))
    _write_json(args.json, {"min_db": float(np.min(db)),
                            "max_db": float(np.max(db))})
    return EXIT_OK


def cmd_fit_resonator(args) -> int:
    grid, trace = csvio.parse_trace_csv(Path(args.input).read_text())
    fit = fit_resonance(trace, grid)
    m = fit.model
    _print_table([("f0", f"{m.f0 / 1e9:.9f} GHz"),
                  ("Ql", f"{m.q_loaded:.1f}"),
                  ("|Qc|", f"{m.q_coupling_mag:.1f}"),
                  ("phi", f"{m.phi:.6f} rad"),
                  ("amplitude", f"{m.amplitude:.6f}"),
                  ("cable delay", f"{m.cable_delay * 1e9:.4f} ns"),
                  ("Qi", f"{fit.q_internal:.1f}"),
                  ("residual rms", f"{fit.residual_rms:.3e}"),
                  ("iterations", str(fit.iterations)),
                  ("converged", str(fit.converged))])
    _write_json(args.json, {
        "f0_hz": m.f0, "q_loaded": m.q_loaded, "q_coupling_mag": m.q_coupling_mag,
        "phi_rad": m.phi, "amplitude": m.amplitude, "cable_delay_s": m.cable_delay,
        "q_internal": fit.q_internal, "residual_rms": fit.residual_rms,
        "iterations": fit.iterations, "converged": fit.converged,
        "covariance_diag": list(fit.covariance_diag)})
    return EXIT_OK


def cmd_sim_rabi(args) -> int:
    qubit = QubitSpec(f01=args.f01, t1=args.t1, t2=args.t2)
    drive = DriveSpec(rabi_rate=args.rabi_rate, drive_frequency=args.f01,
                      duration=args.tmax)
    times = np.linspace(0.0, args.tmax, args.points)
    trace = simulate_rabi(qubit, drive, times)
    _print_table([("rabi rate", f"{args.rabi_rate / 1e6:g} MHz"),
                  ("samples", str(args.points)),
                  ("final population",
                   f"{trace.excited_population[-1]:.6f}")])
    _write_text(args.out, csvio.format_population_csv(
        trace.times, trace.excited_population))
    return EXIT_OK


def cmd_fit_rabi(args) -> int:
    times, pops = csvio.parse_population_csv(Path(args.input).read_text())
    fit = fit_rabi(RabiTrace(times=times, excited_population=pops))
    _print_table([("omega", f"{fit.omega / 1e6:.6f} MHz"),
                  ("tau", f"{fit.tau * 1e6:.6f} us"),
                  ("amplitude", f"{fit.amplitude:.6f}"),
                  ("offset", f"{fit.offset:.6f}"),
                  ("phase", f"{fit.phase:.6f} rad"),
                  ("iterations", str(fit.iterations)),
                  ("converged", str(fit.converged))])
    _write_json(args.json, {"omega_hz": fit.omega, "tau_s": fit.tau,
                            "amplitude": fit.amplitude, "offset": fit.offset,
                            "phase_rad": fit.phase,
                            "iterations": fit.iterations,
                            "converged": fit.converged})
    return EXIT_OK


def _system_from_args(args) -> TwoQubitSystem:
    control = QubitSpec(f01=args.control_f01, t1=args.t1, t2=args.t2)
    target = QubitSpec(f01=args.target_f01, t1=args.t1, t2=args.t2)
    return TwoQubitSystem(control=control, target=target, zx_rate=args.zx,
                          ix_rate=args.ix, target_t2_control0=args.tau0,
                          target_t2_control1=args.tau1,
                          control_zero_slower=not args.zero_faster)


def _add_system_args(sub) -> None:
    sub.add_argument("--ix", type=_freq, default="3.571428571MHz",
                     help="unconditional target rate (default %(default)s)")
    sub.add_argument("--zx", type=_freq, default="1.428571429MHz",
                     help="conditional rate difference (default %(default)s)")
    sub.add_argument("--tau0", type=_time, default="750ns",
                     help="target coherence, control |0> (default %(default)s)")
    sub.add_argument("--tau1", type=_time, default="340ns",
                     help="target coherence, control |1> (default %(default)s)")
    sub.add_argument("--control-f01", type=_freq, default="4.8GHz")
    sub.add_argument("--target-f01", type=_freq, default="5.0GHz")
    sub.add_argument("--t1", type=_time, default="5us")
    sub.add_argument("--t2", type=_time, default="3.47us")
    sub.add_argument("--zero-faster", action="store_true",
                     help="flip the sign convention: control |0> takes the "
                          "faster rate")


def cmd_sim_cr(args) -> int:
    system = _system_from_args(args)
    times = np.linspace(0.0, args.tmax, args.points)
    trace = simulate_cr(system, args.control, times)
    omega0, omega1 = system.conditional_rates()
    _print_table([("control state", str(args.control)),
                  ("rate (control 0)", f"{omega0 / 1e6:.6f} MHz"),
                  ("rate (control 1)", f"{omega1 / 1e6:.6f} MHz"),
                  ("final population",
                   f"{trace.excited_population[-1]:.6f}")])
    _write_text(args.out, csvio.format_population_csv(
        trace.times, trace.excited_population))
    return EXIT_OK


def cmd_calibrate_cnot(args) -> int:
    system = _system_from_args(args)
    cal = calibrate_cnot(system, args.tmax)
    _print_table([("gate time", f"{cal.gate_time * 1e9:.2f} ns"),
                  ("contrast", f"{cal.contrast:.4f}")])
    _write_json(args.json, {"gate_time_s": cal.gate_time,
                            "contrast": cal.contrast})
    return EXIT_OK


def cmd_fidelity(args) -> int:
    if args.gate == "cnot":
        system = _system_from_args(args)
        ptm = simulate_cnot_process(system, args.gate_time)
        report = average_gate_fidelity(ptm, cnot_unitary())
    else:
        qubit = QubitSpec(f01=args.target_f01, t1=args.t1, t2=args.t2)
        ptm = simulate_not_process(qubit, args.duration)
        report = average_gate_fidelity(ptm, not_unitary())
    _print_table([("gate", args.gate),
                  ("dimension", str(report.dimension)),
                  ("process fidelity", f"{report.process_fidelity:.6f}"),
                  ("average fidelity", f"{report.average_fidelity:.6f}")])
    _write_json(args.json, {"gate": args.gate,
                            "dimension": report.dimension,
                            "process_fidelity": report.process_fidelity,
                            "average_fidelity": report.average_fidelity})
    return EXIT_OK


def cmd_layout_validate(args) -> int:
    layout = _load_layout(args)
    report = validate_layout(layout)
    n_data = sum(1 for q in layout.qubits if q.role == "data")
    _print_table([("qubits", f"{len(layout.qubits)} ({n_data} data, "
                             f"{len(layout.qubits) - n_data} measure)"),
                  ("buses", str(len(layout.buses))),
                  ("valid", str(report.ok))])
    for violation in report.violations:
        print(f"violation: {violation}")
    _write_json(args.json, {"valid": report.ok,
                            "violations": list(report.violations)})
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_netlist(args) -> int:
    layout = _load_layout(args)
    text = export_netlist(layout)
    if args.out:
        _write_text(args.out, text)
    else:
        print(text, end="")
    return EXIT_OK


def _load_layout(args):
    if args.config:
        doc = load_config(args.config)
        if "layout" not in doc:
            raise ConfigError("missing 'layout' block", str(args.config))
        return build_layout(doc["layout"])
    return nju13_layout()


# ---------------------------------------------------------------- reproduce

def _reproduce_dc(outdir: Path | None, seed: int) -> dict:
    trace = presets.nju13_trace()
    r = dc_resistance(trace)
    rho = resistivity_from_measurement(0.15, trace)
    contact = presets.nju13_contact()
    return {
        "strip_resistance_ohm": r,
        "measured_strip_resistance_ohm": 0.15,
        "resistivity_from_measured_ohm_m": rho,
        "series_path_resistance_ohm": series_path_resistance(trace, contact),
    }


def _reproduce_cavity(outdir: Path | None, seed: int) -> dict:
    box = CavityBox(a=16.2e-3, b=16.2e-3, d=2e-3)
    modes = cavity_modes(box, 5)
    return {
        "box_mm": [16.2, 16.2, 2.0],
        "lowest_mode_ghz": modes[0].frequency / 1e9,
        "lowest_mode_indices": list(modes[0].indices),
        "above_10_ghz": modes[0].frequency > 10e9,
        "modes_ghz": [m.frequency / 1e9 for m in modes],
    }


def _reproduce_via_loss(outdir: Path | None, seed: int) -> dict:
    grid = FrequencyGrid.linear(presets.BAND_MIN, presets.BAND_MAX, 501)
    s21 = sweep_s21(presets.nju13_chain(), grid)
    db = 20.0 * np.log10(np.abs(s21))
    if outdir:
        (outdir / "via_loss_sweep.csv").write_text(
            csvio.format_sweep_csv(grid, s21))
    return {"band_ghz": [3.0, 8.0], "max_dip_db": -float(np.min(db)),
            "envelope_db": 1.5}


def _reproduce_xtalk(outdir: Path | None, seed: int) -> dict:
    grid = FrequencyGrid.linear(presets.BAND_MIN, presets.BAND_MAX, 501)
    buried = crosstalk_s21(CoupledPair.preset("buried_cpw"), grid)
    wire = crosstalk_s21(CoupledPair.preset("wire_bond"), grid)
    return {
        "buried_cpw_db": [float(np.min(buried)), float(np.max(buried))],
        "wire_bond_db": [float(np.min(wire)), float(np.max(wire))],
        "wire_bond_worse_everywhere": bool(np.all(wire > buried)),
    }


def _qi_fixture_models() -> list[NotchResonanceModel]:
    models = []
    for f0, qi in ((5.372e9, 62000.0), (5.459e9, 13000.0)):
        ql = qi / 3.1  # under-coupled side, dip depth ~ 2/3
        qc = 1.0 / (1.0 / ql - 1.0 / qi)
        models.append(NotchResonanceModel(f0=f0, q_loaded=ql,
                                          q_coupling_mag=qc, phi=0.0,
                                          amplitude=1.0, cable_delay=20e-9))
    return models


def _reproduce_qi(outdir: Path | None, seed: int) -> dict:
    rng = np.random.default_rng(seed)
    results = []
    for model in _qi_fixture_models():
        span = 10.0 * model.f0 / model.q_loaded
        grid = FrequencyGrid.linear(model.f0 - span, model.f0 + span, 401)
        clean = model_s21(model, grid)
        fit_clean = fit_resonance(clean, grid)
        noise = 0.01 * (rng.standard_normal(len(grid))
                        + 1j * rng.standard_normal(len(grid)))
        fit_noisy = fit_resonance(clean + noise, grid)
        qi_true = 1.0 / (1.0 / model.q_loaded - 1.0 / model.q_coupling_mag)
        results.append({
            "f0_ghz": model.f0 / 1e9,
            "qi_true": qi_true,
            "qi_fit_noiseless": fit_clean.q_internal,
            "qi_fit_noisy_1pct": fit_noisy.q_internal,
        })
        if outdir:
            name = f"resonator_{model.f0 / 1e9:.3f}GHz.csv"
            (outdir / name).write_text(csvio.format_trace_csv(grid, clean + noise))
    return {"resonators": results}


def _reproduce_rabi(outdir: Path | None, seed: int) -> dict:
    rng = np.random.default_rng(seed)
    qubit = QubitSpec(f01=5.0e9, t1=3.47e-6, t2=3.47e-6)
    drive = DriveSpec(rabi_rate=2e6, drive_frequency=5.0e9, duration=5e-6)
    times = np.linspace(0.0, 5e-6, 501)
    trace = simulate_rabi(qubit, drive, times)
    noisy = np.clip(trace.excited_population
                    + 0.01 * rng.standard_normal(times.size), 0.0, 1.0)
    fit = fit_rabi(RabiTrace(times=times, excited_population=noisy))
    if outdir:
        (outdir / "rabi_trace.csv").write_text(
            csvio.format_population_csv(times, noisy))
    return {
        "envelope_time_true_us": 3.47,
        "tau_fit_us": fit.tau * 1e6,
        "omega_fit_mhz": fit.omega / 1e6,
        "omega_true_mhz": 2.0,
    }


def _reproduce_cnot(outdir: Path | None, seed: int) -> dict:
    kw = dict(control=QubitSpec(4.8e9, 5e-6, 3.47e-6),
              target=QubitSpec(5.0e9, 5e-6, 3.47e-6),
              zx_rate=1.5 / 0.35e-6 - 1.0 / 0.35e-6,
              ix_rate=0.5 * (1.5 / 0.35e-6 + 1.0 / 0.35e-6))
    quiet = TwoQubitSystem(**kw, target_t2_control0=1e-4,
                           target_t2_control1=1e-4)
    cal = calibrate_cnot(quiet, t_max=1e-6)
    paper_like = TwoQubitSystem(**kw, target_t2_control0=750e-9,
                                target_t2_control1=340e-9)
    ptm = simulate_cnot_process(paper_like, cal.gate_time)
    cnot_report = average_gate_fidelity(ptm, cnot_unitary())
    not_report = average_gate_fidelity(
        simulate_not_process(QubitSpec(5.0e9, 3.47e-6, 3.47e-6), 20e-9),
        not_unitary())
    return {
        "gate_time_ns": cal.gate_time * 1e9,
        "contrast": cal.contrast,
        "cnot_average_fidelity": cnot_report.average_fidelity,
        "not_average_fidelity": not_report.average_fidelity,
    }


SCENARIOS = {
    "dc": _reproduce_dc,
    "cavity": _reproduce_cavity,
    "via-loss": _reproduce_via_loss,
    "xtalk": _reproduce_xtalk,
    "qi": _reproduce_qi,
    "rabi": _reproduce_rabi,
    "cnot": _reproduce_cnot,
}


def cmd_reproduce(args) -> int:
    outdir = Path(args.outdir) if args.outdir else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    payload = SCENARIOS[args.scenario](outdir, args.seed)
    print(f"scenario: {args.scenario}")
    print(json.dumps(payload, indent=2, sort_keys=True))
    if outdir:
        (outdir / f"{args.scenario.replace('-', '_')}_report.json").write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpack",
        description="3D PCB package toolkit: microwave checks, resonator "
                    "fits, and qubit-gate simulations")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--json", help="write a JSON report to this path")
        return p

    p = add("stackup-check", cmd_stackup_check, "validate a PCB stackup")
    p.add_argument("--config", help="YAML config with a 'stackup' block")
    p.add_argument("--preset", choices=["nju13"], default="nju13")

    p = add("dc", cmd_dc, "DC strip and contact resistance")
    p.add_argument("--config", help="YAML config with a 'trace' block")
    p.add_argument("--measured-r", type=_res,
                   help="measured strip resistance, to invert for resistivity")
    p.add_argument("--contact-resistance", type=_res,
                   help="add a series contact, e.g. 50mohm")

    p = add("cpw", cmd_cpw, "CPW impedance or inverse gap design")
    p.add_argument("--w", type=_length, required=True, help="strip width")
    p.add_argument("--gap", type=_length, help="gap width")
    p.add_argument("--er", type=_number, required=True,
                   help="relative permittivity")
    p.add_argument("--solve-gap", action="store_true")
    p.add_argument("--z0", type=_res, default=50.0, help="target impedance")

    p = add("cavity-modes", cmd_cavity_modes, "rectangular enclosure modes")
    p.add_argument("--a", type=_length, required=True)
    p.add_argument("--b", type=_length, required=True)
    p.add_argument("--d", type=_length, required=True)
    p.add_argument("--er", type=_number, default=1.0)
    p.add_argument("--count", type=int, default=5)

    p = add("sweep", cmd_sweep, "S21 of a cascaded chain")
    p.add_argument("--config", help="YAML config with a 'sweep.chain' block")
    p.add_argument("--fmin", type=_freq, default="3GHz")
    p.add_argument("--fmax", type=_freq, default="8GHz")
    p.add_argument("--points", type=int, default=501)
    p.add_argument("--out", help="write the sweep CSV here")

    p = add("xtalk", cmd_xtalk, "crosstalk between adjacent lines")
    p.add_argument("--preset", choices=["buried_cpw", "wire_bond"],
                   default="buried_cpw")
    p.add_argument("--coupling", type=_number,
                   help="override the preset coupling coefficient")
    p.add_argument("--fmin", type=_freq, default="3GHz")
    p.add_argument("--fmax", type=_freq, default="8GHz")
    p.add_argument("--points", type=int, default=501)
    p.add_argument("--out", help="write the trace CSV here")

    p = add("fit-resonator", cmd_fit_resonator, "notch fit of an S21 trace")
    p.add_argument("--input", required=True,
                   help="CSV with freq_hz,s21_re,s21_im")

    p = add("sim-rabi", cmd_sim_rabi, "Rabi oscillation of one qubit")
    p.add_argument("--f01", type=_freq, default="5GHz")
    p.add_argument("--t1", type=_time, default="3.47us")
    p.add_argument("--t2", type=_time, default="3.47us")
    p.add_argument("--rabi-rate", type=_freq, default="2MHz")
    p.add_argument("--tmax", type=_time, default="5us")
    p.add_argument("--points", type=int, default=501)
    p.add_argument("--out", help="write the population CSV here")

    p = add("fit-rabi", cmd_fit_rabi, "damped-cosine fit of a Rabi trace")
    p.add_argument("--input", required=True, help="CSV with time_s,population")

    p = add("sim-cr", cmd_sim_cr, "cross-resonance target trace")
    _add_system_args(p)
    p.add_argument("--control", type=int, choices=[0, 1], default=0)
    p.add_argument("--tmax", type=_time, default="700ns")
    p.add_argument("--points", type=int, default=701)
    p.add_argument("--out", help="write the population CSV here")

    p = add("calibrate-cnot", cmd_calibrate_cnot, "find the CNOT pulse length")
    _add_system_args(p)
    p.add_argument("--tmax", type=_time, default="1us")

    p = add("fidelity", cmd_fidelity, "average gate fidelity report")
    _add_system_args(p)
    p.add_argument("--gate", choices=["cnot", "not"], required=True)
    p.add_argument("--gate-time", type=_time, default="350ns")
    p.add_argument("--duration", type=_time, default="20ns",
                   help="NOT-gate pulse length")

    p = add("layout-validate", cmd_layout_validate, "check a chip layout")
    p.add_argument("--config", help="YAML config with a 'layout' block")
    p.add_argument("--preset", choices=["nju13"], default="nju13")

    p = add("netlist", cmd_netlist, "export the layout netlist")
    p.add_argument("--config", help="YAML config with a 'layout' block")
    p.add_argument("--preset", choices=["nju13"], default="nju13")
    p.add_argument("--out", help="write the netlist here")

    p = add("reproduce", cmd_reproduce, "regenerate a paper-scenario check")
    p.add_argument("scenario", choices=sorted(SCENARIOS))
    p.add_argument("--outdir", help="directory for CSV/JSON artifacts")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, LayoutParseError, units.UnitError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FitError, CalibrationError, NoSolutionError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

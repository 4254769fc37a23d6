"""Experiment runner.

    zitterlab <command> --config <path> [--out <dir>] [--svg]

The config is flat JSON with dotted keys, e.g. ``{"grid.n": 1024,
"evolution.dt": 1e-5}``. Unknown keys are rejected. Exit status is 0 on
success, 1 when the config is invalid and 2 when a run fails.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__, electrocalc, io, plots
from .algebra import ALPHAS, BETA, I4, anticommutator, eigen_hermitian, hermiticity_defect
from .constants import PhysConsts, UnitSystem, preset
from .dynamics import (
    EvolutionConfig,
    Grid1D,
    config_violations,
    drift_velocity,
    energy_sign_fractions,
    evolve,
    init_gaussian,
    mean_position,
    mean_velocity,
    norm_squared,
    zb_fit,
)
from .errors import ConfigInvalid, NoPeak, NoStructure, ZitterlabError
from .pairsim import (
    JOINT_MAX_N,
    amplitude_vs_field,
    detect_satellites,
    is_non_increasing,
    pair_mode_series,
    satellite_speed,
)
from .potentials import PotentialKind, PotentialSpec

COMMANDS = ("algebra-check", "zitter", "pairsim", "scan", "calc")
DEFAULTS_VERSION = 1


@dataclass
class GridSection:
    n: Optional[int] = None  # per-command default
    length: Optional[float] = None
    center: float = 0.0


@dataclass
class EvolutionSection:
    dt: float = 1e-5
    n_steps: int = 1000
    record_every: int = 1


@dataclass
class PacketSection:
    x0: float = 0.0
    p0_mc: float = 0.0  # momentum in units of mc
    sigma: float = 0.1
    mix_plus: float = math.sqrt(0.5)
    mix_minus: float = math.sqrt(0.5)
    mix_phase: float = 0.0  # relative phase of the negative-energy part


@dataclass
class PotentialSection:
    kind: Optional[str] = None  # per-command default
    V0_mc2: Optional[float] = None  # step height in units of mc^2
    W_compton: Optional[float] = None  # width in units of hbar/mc
    closure_fraction: float = 0.05  # closure ramp width / box length


@dataclass
class PairSection:
    times: list = field(default_factory=lambda: [2e-4, 3e-4, 4e-4, 5e-4, 6e-4, 7e-4, 8e-4])
    n_modes: Optional[int] = None
    joint: bool = False
    threshold: float = 0.05
    min_separation: int = 3
    dt_safety: float = 0.8


@dataclass
class ScanSection:
    t: float = 8e-4
    V0_mc2: list = field(default_factory=lambda: [2.2, 2.5, 3.0, 4.0])
    W_fixed_compton: float = 0.3
    W_compton: list = field(default_factory=lambda: [0.3, 0.1, 0.03])
    V0_fixed_mc2: float = 2.5


@dataclass
class AlgebraSection:
    samples: int = 100


@dataclass
class CalcSection:
    format: str = "text"


@dataclass
class RunConfig:
    command: str = "calc"
    units: str = "AtomicUnits"
    output_dir: str = "out"
    emit_svg: bool = False
    seed: int = 0
    grid: GridSection = field(default_factory=GridSection)
    evolution: EvolutionSection = field(default_factory=EvolutionSection)
    packet: PacketSection = field(default_factory=PacketSection)
    potential: PotentialSection = field(default_factory=PotentialSection)
    pairsim: PairSection = field(default_factory=PairSection)
    scan: ScanSection = field(default_factory=ScanSection)
    algebra: AlgebraSection = field(default_factory=AlgebraSection)
    calc: CalcSection = field(default_factory=CalcSection)

    @property
    def consts(self) -> PhysConsts:
        return preset(self.units)

    def to_flat(self) -> dict:
        out = {}
        for f in dataclasses.fields(self):
            v = getattr(self, f.name)
            if dataclasses.is_dataclass(v):
                for g in dataclasses.fields(v):
                    out[f"{f.name}.{g.name}"] = getattr(v, g.name)
            else:
                out[f.name] = v
        return out


# per-command defaults filled in after parsing
_COMMAND_DEFAULTS = {
    "zitter": {"grid.n": 1024, "grid.length": 2.0, "potential.kind": "Zero"},
    "pairsim": {"grid.n": 512, "grid.length": 1.0, "potential.kind": "TanhStep",
                "potential.V0_mc2": 2.5, "potential.W_compton": 0.3},
    "scan": {"grid.n": 512, "grid.length": 1.0, "potential.kind": "TanhStep"},
}


def _coerce(path, value, default, annotation):
    ann = str(annotation)
    if "list" in ann:
        if not isinstance(value, list) or not all(
                isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
            raise ConfigInvalid(path, "expected a list of numbers")
        return [float(v) for v in value]
    if value is None:
        if "Optional" in ann:
            return None
        raise ConfigInvalid(path, "may not be null")
    if "bool" in ann:
        if not isinstance(value, bool):
            raise ConfigInvalid(path, "expected true or false")
        return value
    if "int" in ann:
        if isinstance(value, bool) or not (isinstance(value, int) or
                                           (isinstance(value, float) and value.is_integer())):
            raise ConfigInvalid(path, f"expected an integer, got {value!r}")
        return int(value)
    if "float" in ann:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigInvalid(path, f"expected a number, got {value!r}")
        if not math.isfinite(value):
            raise ConfigInvalid(path, "must be finite")
        return float(value)
    if "str" in ann:
        if not isinstance(value, str):
            raise ConfigInvalid(path, f"expected a string, got {value!r}")
        return value
    return value


def _flatten(d, prefix=""):
    out = {}
    for key, value in d.items():
        path = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(_flatten(value, path + "."))
        else:
            out[path] = value
    return out


def parse_config(raw: dict, command: Optional[str] = None) -> RunConfig:
    """Build a RunConfig from a (flat or nested) dict, validating every key."""
    if not isinstance(raw, dict):
        raise ConfigInvalid("<root>", "config must be a JSON object")
    flat = _flatten(raw)
    cfg = RunConfig()
    if command is not None:
        if "command" in flat and flat["command"] != command:
            raise ConfigInvalid("command", f"config says {flat['command']!r} but {command!r} was requested")
        flat["command"] = command
    cmd = flat.get("command", cfg.command)
    if cmd not in COMMANDS:
        raise ConfigInvalid("command", f"unknown command {cmd!r}; expected one of {', '.join(COMMANDS)}")
    for key, value in {**_COMMAND_DEFAULTS.get(cmd, {}), **flat}.items():
        parts = key.split(".")
        if len(parts) == 1:
            target, name = cfg, parts[0]
        elif len(parts) == 2 and parts[0] in {f.name for f in dataclasses.fields(cfg)} \
                and dataclasses.is_dataclass(getattr(cfg, parts[0])):
            target, name = getattr(cfg, parts[0]), parts[1]
        else:
            raise ConfigInvalid(key, "unknown key")
        fields_ = {f.name: f for f in dataclasses.fields(target)}
        if name not in fields_ or dataclasses.is_dataclass(getattr(target, name)):
            raise ConfigInvalid(key, "unknown key")
        f = fields_[name]
        setattr(target, name, _coerce(key, value, getattr(target, name), f.type))
    validate(cfg)
    return cfg


def load_config(path, command=None) -> RunConfig:
    try:
        raw = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigInvalid("<file>", f"config file {path} not found") from None
    except json.JSONDecodeError as exc:
        raise ConfigInvalid("<file>", f"not valid JSON: {exc}") from None
    return parse_config(raw, command)


def _grid(cfg: RunConfig) -> Grid1D:
    return Grid1D.centered(cfg.grid.n, cfg.grid.length, cfg.grid.center)


def _potential(cfg: RunConfig, V0_mc2=None, W_compton=None) -> PotentialSpec:
    k, p = cfg.consts, cfg.potential
    if PotentialKind(p.kind) is PotentialKind.ZERO:
        return PotentialSpec.zero()
    V0 = (V0_mc2 if V0_mc2 is not None else p.V0_mc2) * k.rest_energy
    W = (W_compton if W_compton is not None else p.W_compton) * k.compton
    return PotentialSpec.tanh_step(V0, W, p.closure_fraction * cfg.grid.length)


def validate(cfg: RunConfig):
    """Check every numeric field against the invariants of the module it feeds."""
    try:
        UnitSystem(cfg.units)
    except ValueError:
        raise ConfigInvalid("units", f"unknown unit system {cfg.units!r}") from None
    if cfg.command == "calc" and cfg.calc.format not in ("text", "json"):
        raise ConfigInvalid("calc.format", "expected 'text' or 'json'")
    if cfg.command == "algebra-check" and cfg.algebra.samples < 1:
        raise ConfigInvalid("algebra.samples", "must be positive")
    if cfg.command not in ("zitter", "pairsim", "scan"):
        return
    n, length = cfg.grid.n, cfg.grid.length
    if n is None or n < 8 or n & (n - 1):
        raise ConfigInvalid("grid.n", f"must be a power of two >= 8, got {n}")
    if length is None or not length > 0:
        raise ConfigInvalid("grid.length", "must be positive")
    try:
        PotentialKind(cfg.potential.kind)
    except ValueError:
        raise ConfigInvalid("potential.kind", f"expected Zero or TanhStep, got {cfg.potential.kind!r}") from None
    if cfg.potential.kind == "Table":
        raise ConfigInvalid("potential.kind", "sampled tables are a library feature, not a config option")
    k = cfg.consts
    grid = _grid(cfg)
    if not grid.momentum_cutoff(k) > 8 * k.m * k.c:
        raise ConfigInvalid("grid.n", f"momentum cutoff pi*hbar/dx = {grid.momentum_cutoff(k):.6g} "
                                      f"must exceed 8mc = {8 * k.m * k.c:.6g}")
    if cfg.potential.kind == "TanhStep" and cfg.command != "scan":
        for name in ("V0_mc2", "W_compton"):
            if getattr(cfg.potential, name) is None:
                raise ConfigInvalid(f"potential.{name}", "required for a TanhStep potential")
        if not cfg.potential.W_compton > 0:
            raise ConfigInvalid("potential.W_compton", "step width must be positive")
    if not 0 < cfg.potential.closure_fraction < 0.25:
        raise ConfigInvalid("potential.closure_fraction", "must lie in (0, 0.25)")

    if cfg.command == "zitter":
        ev, pk = cfg.evolution, cfg.packet
        if ev.n_steps < 1 or ev.record_every < 1:
            raise ConfigInvalid("evolution.n_steps", "n_steps and record_every must be positive")
        if not ev.dt > 0:
            raise ConfigInvalid("evolution.dt", "must be positive")
        for problem in config_violations(grid, ev.dt, _potential(cfg), k):
            raise ConfigInvalid("evolution.dt" if "dt=" in problem else "grid.n", problem)
        if abs(pk.mix_plus**2 + pk.mix_minus**2 - 1) > 1e-10:
            raise ConfigInvalid("packet.mix_plus", "mix_plus^2 + mix_minus^2 must equal 1")
        if pk.sigma < 4 * grid.dx:
            raise ConfigInvalid("packet.sigma", f"sigma must be at least 4*dx = {4 * grid.dx:.6g}")
        if pk.x0 - 6 * pk.sigma < grid.x_min or pk.x0 + 6 * pk.sigma > grid.x_max:
            raise ConfigInvalid("packet.x0", "x0 +- 6 sigma must lie inside the grid")

    if cfg.command == "pairsim":
        ps = cfg.pairsim
        if not ps.times or any(t < 0 for t in ps.times) or sorted(ps.times) != ps.times:
            raise ConfigInvalid("pairsim.times", "must be a non-empty ascending list of times >= 0")
        if ps.n_modes is not None and not 1 <= ps.n_modes <= n:
            raise ConfigInvalid("pairsim.n_modes", f"must lie in [1, grid.n = {n}]")
        if ps.joint and n > JOINT_MAX_N:
            raise ConfigInvalid("pairsim.joint", f"joint density needs grid.n <= {JOINT_MAX_N}")
        if not 0 < ps.threshold < 1:
            raise ConfigInvalid("pairsim.threshold", "must lie in (0, 1)")
        if ps.min_separation < 1:
            raise ConfigInvalid("pairsim.min_separation", "must be positive")
        if not 0 < ps.dt_safety <= 1:
            raise ConfigInvalid("pairsim.dt_safety", "must lie in (0, 1]")

    if cfg.command == "scan":
        sc = cfg.scan
        if len(sc.V0_mc2) < 4:
            raise ConfigInvalid("scan.V0_mc2", "needs at least four step heights")
        if len(sc.W_compton) < 3:
            raise ConfigInvalid("scan.W_compton", "needs at least three widths")
        for path, values in (("scan.V0_mc2", sc.V0_mc2), ("scan.V0_fixed_mc2", [sc.V0_fixed_mc2])):
            if any(not v > 2 for v in values):
                raise ConfigInvalid(path, "step heights must be supercritical (> 2 mc^2)")
        for path, values in (("scan.W_compton", sc.W_compton), ("scan.W_fixed_compton", [sc.W_fixed_compton])):
            if any(not v > 0 for v in values):
                raise ConfigInvalid(path, "widths must be positive")
        if not sc.t > 0:
            raise ConfigInvalid("scan.t", "must be positive")


# --- commands -------------------------------------------------------------

def _algebra_checks(cfg: RunConfig):
    names = ("alpha_x", "alpha_y", "alpha_z")
    checks = []

    def add(name, value, tol=1e-12):
        checks.append({"check": name, "deviation": float(value), "tolerance": tol,
                       "pass": bool(value <= tol)})

    for i in range(3):
        for j in range(3):
            target = 2 * I4 if i == j else 0 * I4
            add(f"{{{names[i]},{names[j]}}} = {'2I' if i == j else '0'}",
                np.abs(anticommutator(ALPHAS[i], ALPHAS[j]) - target).max())
        add(f"{{{names[i]},beta}} = 0", np.abs(anticommutator(ALPHAS[i], BETA)).max())
    add("beta^2 = I", np.abs(BETA @ BETA - I4).max())
    for name, m in zip(names + ("beta",), ALPHAS + (BETA,)):
        add(f"trace {name} = 0", abs(np.trace(m)))
        add(f"{name} hermitian", hermiticity_defect(m))
        add(f"spectrum {name} = (-1,-1,1,1)", np.abs(eigen_hermitian(m)[0] - [-1, -1, 1, 1]).max())
    rng = np.random.default_rng(cfg.seed)
    worst = 0.0
    for _ in range(cfg.algebra.samples):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        a = a + a.conj().T
        w, v = eigen_hermitian(a)
        worst = max(worst, np.abs(v @ np.diag(w) @ v.conj().T - a).max())
    add(f"random hermitian reconstruction ({cfg.algebra.samples} samples)", worst, 1e-9)
    return checks


def run_algebra(cfg, out, svg):
    checks = _algebra_checks(cfg)
    lines = [f"{'PASS' if c['pass'] else 'FAIL'}  {c['check']}  dev={io.fmt(c['deviation'])}"
             for c in checks]
    (out / "algebra_report.txt").write_text("\n".join(lines) + "\n")
    io.write_json(out / "algebra_report.json", checks)
    print("\n".join(lines))
    ok = all(c["pass"] for c in checks)
    return {"all_pass": ok, "n_checks": len(checks)}, (0 if ok else 2), ["algebra_report.txt", "algebra_report.json"]


def run_zitter(cfg, out, svg):
    k, pk, ev = cfg.consts, cfg.packet, cfg.evolution
    grid = _grid(cfg)
    mix = (pk.mix_plus, pk.mix_minus * complex(math.cos(pk.mix_phase), math.sin(pk.mix_phase)))
    p0 = pk.p0_mc * k.m * k.c
    field0 = init_gaussian(grid, pk.x0, p0, pk.sigma, mix, k)
    config = EvolutionConfig(ev.dt, ev.n_steps, _potential(cfg), ev.record_every)
    obs = {"mean_x": mean_position, "mean_v": lambda f: mean_velocity(f, k)}
    final, series = evolve(field0, config, k, obs)
    files = ["series_mean_x.csv", "series_mean_v.csv", "snapshot_initial.csv", "snapshot_final.csv"]
    io.write_series(out / files[0], series["mean_x"])
    io.write_series(out / files[1], series["mean_v"])
    io.write_snapshot(out / files[2], field0)
    io.write_snapshot(out / files[3], final)
    f0, f1 = energy_sign_fractions(field0, k), energy_sign_fractions(final, k)
    # the negative-energy part moves against p0, so the two parts' drifts partly cancel
    v_group = p0 * k.c**2 / math.hypot(k.rest_energy, p0 * k.c)
    result = {
        "drift_velocity": drift_velocity(series["mean_x"]),
        "expected_drift": (f0[0] - f0[1]) * v_group,
        "expected_frequency": k.zb_frequency,
        "expected_amplitude": k.compton / 2,
        "fractions_initial": list(f0),
        "fractions_final": list(f1),
        "norm_drift": abs(norm_squared(final) - norm_squared(field0)),
        "max_abs_velocity_over_c": float(np.max(np.abs(series["mean_v"].values)) / k.c),
        "amplitude_definition": "2|DTFT peak|/N of the linearly detrended <x>(t)",
    }
    try:
        fit = zb_fit(series["mean_x"], k)
        result.update(peak=True, frequency=fit.frequency, amplitude=fit.amplitude,
                      peak_ratio=fit.peak_ratio)
    except NoPeak as exc:
        result.update(peak=False, frequency=exc.frequency, amplitude=exc.amplitude,
                      no_peak_reason=str(exc))
    io.write_json(out / "fit.json", result)
    files.append("fit.json")
    if svg:
        t, x = series["mean_x"].as_arrays()
        plots.save(out / "mean_x.svg", plots.line_svg(t, x, "<x>(t)", "t (a.u.)", "<x> (a.u.)"))
        files.append("mean_x.svg")
    print(json.dumps(io._jsonable(result), indent=2, sort_keys=True))
    return result, 0, files


def _detect(d, cfg):
    return detect_satellites(d, cfg.pairsim.threshold, cfg.pairsim.min_separation)


def run_pairsim(cfg, out, svg):
    k, ps = cfg.consts, cfg.pairsim
    grid = _grid(cfg)
    runs = pair_mode_series(grid, _potential(cfg), ps.times, k, ps.n_modes, joint=ps.joint,
                            dt_safety=ps.dt_safety)
    files, reports, structured = [], [], []
    for i, d in enumerate(runs):
        name = f"densities_{i:03d}.csv"
        io.write_densities(out / name, d)
        files.append(name)
        entry = {"index": i, "time": d.time, "electron_number": d.electron_number,
                 "positron_number": d.positron_number}
        try:
            rep = _detect(d, cfg)
            entry.update(dataclasses.asdict(rep))
            structured.append(d)
        except NoStructure as exc:
            entry["no_structure"] = str(exc)
        reports.append(entry)
        if d.joint is not None:
            jname = f"joint_{i:03d}.txt"
            io.write_joint(out / jname, d.joint, grid.dx)
            files.append(jname)
            if svg:
                plots.save(out / f"joint_{i:03d}.svg",
                           plots.heatmap_svg(d.joint, grid.x, grid.x, f"joint density t={d.time:g}"))
                files.append(f"joint_{i:03d}.svg")
    speed = None
    if len(structured) >= 3:
        speed = satellite_speed(structured, threshold=ps.threshold, min_separation=ps.min_separation)
    result = {"satellites": reports, "satellite_speed": speed,
              "satellite_speed_over_c": None if speed is None else speed / k.c,
              "compton_h_over_mc": 2 * math.pi * k.compton, "metadata": runs[-1].metadata,
              "window": runs[-1].window}
    io.write_json(out / "satellites.json", result)
    files.append("satellites.json")
    if svg:
        d = runs[-1]
        plots.save(out / "densities_last.svg",
                   plots.line_svg(grid.x, [d.rho_e, d.rho_p], f"densities t={d.time:g}",
                                  "x (a.u.)", "density", ["rho_e", "rho_p"]))
        files.append("densities_last.svg")
    print(json.dumps(io._jsonable({k_: v for k_, v in result.items() if k_ != "satellites"}),
                     indent=2, sort_keys=True))
    if "no_structure" in reports[-1]:
        raise NoStructure(f"at t={runs[-1].time:g}: {reports[-1]['no_structure']}")
    return result, 0, files


def run_scan(cfg, out, svg):
    k, sc = cfg.consts, cfg.scan
    grid = _grid(cfg)
    closure = cfg.potential.closure_fraction * cfg.grid.length
    rows = amplitude_vs_field(
        grid, sc.t,
        V0_list=[v * k.rest_energy for v in sc.V0_mc2], W_fixed=sc.W_fixed_compton * k.compton,
        W_list=[w * k.compton for w in sc.W_compton], V0_fixed=sc.V0_fixed_mc2 * k.rest_energy,
        k=k, closure_width=closure, threshold=cfg.pairsim.threshold,
        min_separation=cfg.pairsim.min_separation,
    )
    table = [dataclasses.asdict(r) for r in rows]
    io.write_rows(out / "scan.csv", table)
    v_sep = [r.separation for r in rows if r.parameter == "V0"]
    w_sep = [r.separation for r in rows if r.parameter == "W"]
    result = {
        "rows": table,
        "V0_non_increasing": is_non_increasing(v_sep, grid.dx),
        "W_non_increasing": is_non_increasing(w_sep, grid.dx),
        "slack": grid.dx,
    }
    files = ["scan.csv"]
    if svg:
        v0 = [r.value for r in rows if r.parameter == "V0"]
        plots.save(out / "scan_V0.svg", plots.line_svg(
            v0, [v_sep, [r.predicted for r in rows if r.parameter == "V0"]],
            "separation vs step height", "V0 (a.u.)", "length (a.u.)", ["measured", "predicted"]))
        files.append("scan_V0.svg")
    for r in table:
        print(f"{r['parameter']:>3} {io.fmt(r['value']):>24} sep={r['separation']:.6g} "
              f"gap={r['gap_depth']:.3g} predicted={r['predicted']:.6g}")
    return result, 0, files


def run_calc(cfg, out, svg):
    k = cfg.consts
    table = electrocalc.calculator_table(k)
    io.write_rows(out / "calc.csv", table)
    io.write_json(out / "calc.json", table)
    if cfg.calc.format == "json":
        print(json.dumps(table, indent=2))
    else:
        for r in table:
            print(f"{r['quantity']:<28} {r['value']:>24.10g}  {r['unit']:<8} {r['formula']}")
    return {"rows": len(table)}, 0, ["calc.csv", "calc.json"]


RUNNERS = {"algebra-check": run_algebra, "zitter": run_zitter, "pairsim": run_pairsim,
           "scan": run_scan, "calc": run_calc}


def run(cfg: RunConfig, out_dir=None, emit_svg=None) -> int:
    out = Path(out_dir or cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    svg = cfg.emit_svg if emit_svg is None else emit_svg
    flat = cfg.to_flat()
    meta = {
        "command": cfg.command,
        "config": flat,
        "config_hash": io.content_hash(flat),
        "units": cfg.units,
        "constants": cfg.consts.to_dict(),
        "version": __version__,
        "defaults_version": DEFAULTS_VERSION,
        "thresholds": {"satellite_threshold": cfg.pairsim.threshold,
                       "min_separation": cfg.pairsim.min_separation},
    }
    try:
        result, status, files = RUNNERS[cfg.command](cfg, out, svg)
        meta.update(status="ok", result=result, outputs=files)
    except ZitterlabError as exc:
        meta.update(status="error", error=f"{type(exc).__name__}: {exc}")
        io.write_json(out / "metadata.json", meta)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    io.write_json(out / "metadata.json", meta)
    return status


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="zitterlab", description=__doc__.split("\n")[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", required=True, help="flat JSON config file")
    parser.add_argument("--out", default=None, help="output directory (overrides output_dir)")
    parser.add_argument("--svg", action="store_true", help="also write SVG plots")
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config, args.command)
    except ConfigInvalid as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return 1
    try:
        return run(cfg, args.out, args.svg or None)
    except (OSError, ValueError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

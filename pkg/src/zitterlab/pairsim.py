"""Pair creation by a suddenly switched-on supercritical step.

The field-theoretic densities are built from single-particle evolutions. At
t = 0 the state is the free vacuum; every free negative-energy plane wave w_n
is propagated with the split-step evolution and its positive-energy part
(free projectors, applied per momentum mode) is the amplitude for an electron
to have been created out of that mode:

    rho_e(x, t) = sum_n |(Lambda_+ U(t) w_n)(x)|^2
    rho_p(x, t) = sum_m |(Lambda_- U(t) v_m)(x)|^2      (v_m positive-energy)

Both spins are included. For momentum along x the spin partner of every
mode is obtained by the component swap (1<->2, 3<->4), which commutes with H,
so only the (psi_1, psi_4) block is propagated and the partner's density is
identical pointwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

import numpy as np

from .algebra import ALPHA_Y, BETA
from .constants import ATOMIC, PhysConsts
from .dynamics import Grid1D, _fft, _ifft, max_stable_dt, propagate
from .errors import JointTooLarge, NoStructure, TooManyModes
from .potentials import PotentialKind, PotentialSpec, tanh_potential

__all__ = [
    "PotentialSpec",
    "PotentialKind",
    "tanh_potential",
    "PairDensities",
    "SatelliteReport",
    "pair_mode_sum",
    "pair_mode_series",
    "detect_satellites",
    "satellite_speed",
    "amplitude_vs_field",
    "charge_conjugate",
    "find_peaks",
    "predicted_amplitude",
    "ScanRow",
    "is_non_increasing",
]

CHARGE_CONJ = 1j * BETA @ ALPHA_Y
JOINT_MAX_N = 256
_BLOCK = ((0, 1),)  # reduced arrays hold (psi_1, psi_4)


def charge_conjugate(psi):
    """psi_c = i beta alpha_y psi^* on arrays of shape (4, ...)."""
    return np.tensordot(CHARGE_CONJ, np.conj(psi), axes=(1, 0))


@dataclass
class PairDensities:
    grid: Grid1D
    rho_e: np.ndarray
    rho_p: np.ndarray
    time: float
    joint: Optional[np.ndarray] = None
    window: Optional[tuple] = None
    metadata: dict = dc_field(default_factory=dict)

    @property
    def electron_number(self) -> float:
        return float(math.fsum(self.rho_e) * self.grid.dx)

    @property
    def positron_number(self) -> float:
        return float(math.fsum(self.rho_p) * self.grid.dx)


@dataclass
class SatelliteReport:
    main_peak_x: float
    satellite_xs: list
    separation: float
    gap_depth: float
    time: float
    outer_separation: float = 0.0
    peak_heights: list = dc_field(default_factory=list)
    nearest_separation: float = 0.0


def _block_energies(grid, k):
    p = grid.momenta(k)
    mc2 = k.m * k.c**2
    E = np.sqrt(mc2**2 + (k.c * p) ** 2)
    return p, mc2, E


def _block_modes(grid, k, sign, indices):
    """Free eigenvectors of the (psi_1, psi_4) block for the chosen modes."""
    p, mc2, E = _block_energies(grid, k)
    cp = k.c * p[indices]
    Ei = E[indices]
    norm = 1.0 / np.sqrt(2 * Ei * (Ei + mc2))
    if sign > 0:
        vec = np.stack([Ei + mc2, cp], axis=1)
    else:
        vec = np.stack([-cp, Ei + mc2], axis=1)
    return vec * norm[:, None]


def _project(psi, grid, k, sign):
    """Apply the free block projector (E + sign h) / 2E mode-wise."""
    p, mc2, E = _block_energies(grid, k)
    phi = _fft(psi)
    a = phi[..., 0, :]
    b = phi[..., 1, :]
    cp = k.c * p
    pa = 0.5 * (a + sign * (mc2 * a + cp * b) / E)
    pb = 0.5 * (b + sign * (cp * a - mc2 * b) / E)
    out = np.stack([pa, pb], axis=-2)
    return _ifft(out)


def _mode_order(grid, n_modes):
    kw = grid.wavenumbers
    order = np.argsort(np.abs(kw), kind="stable")
    if n_modes is None:
        n_modes = grid.n
    if n_modes > grid.n or n_modes < 1:
        raise TooManyModes(f"n_modes must be in [1, {grid.n}], got {n_modes}")
    return np.sort(order[:n_modes])


class _Kahan:
    def __init__(self, n):
        self.s = np.zeros(n)
        self.c = np.zeros(n)

    def add(self, x):
        y = x - self.c
        t = self.s + y
        self.c = (t - self.s) - y
        self.s = t


def _default_window(grid, potential):
    if potential.kind is PotentialKind.TANH_STEP and potential.closure_width:
        return (grid.x_min, grid.x_max - 8 * potential.closure_width)
    return None


def _segments(times, dt_max):
    """Split [0, t_last] into uniform sub-steps that land on every time."""
    out = []
    prev = 0.0
    for t in times:
        span = t - prev
        if span < 0:
            raise ValueError("times must be non-decreasing and >= 0")
        if span == 0:
            out.append((0, 0.0))
            continue
        steps = max(1, math.ceil(span / dt_max - 1e-9))
        out.append((steps, span / steps))
        prev = t
    return out


def pair_mode_series(grid: Grid1D, potential: PotentialSpec, times: Sequence[float],
                     k: PhysConsts = ATOMIC, n_modes: Optional[int] = None,
                     dt: Optional[float] = None, joint: bool = False,
                     chunk: int = 256, dt_safety: float = 0.8):
    """Electron/positron densities at each of ``times`` from one evolution.

    The step size is the smaller of ``dt`` and the aliasing bound of the
    split-step scheme scaled by ``dt_safety``; every requested time is hit
    exactly.
    """
    times = [float(t) for t in times]
    if any(t < 0 for t in times) or sorted(times) != times:
        raise ValueError("times must be sorted and non-negative")
    if joint and grid.n > JOINT_MAX_N:
        raise JointTooLarge(f"joint density is limited to n <= {JOINT_MAX_N}, got {grid.n}")
    indices = _mode_order(grid, n_modes)
    V = potential.sample(grid)
    stable = max_stable_dt(grid, V, k, safety=dt_safety)
    dt_max = min(dt, stable) if dt else stable
    segments = _segments(times, dt_max)

    n = grid.n
    rho = {sign: [_Kahan(n) for _ in times] for sign in (+1, -1)}
    joint_acc = [np.zeros((4, n, 4, n), dtype=complex) for _ in times] if joint else None
    # electrons come from negative-energy modes, positrons from positive ones
    for mode_sign, proj_sign in ((-1, +1), (+1, -1)):
        vecs = _block_modes(grid, k, mode_sign, indices)
        for start in range(0, len(indices), chunk):
            idx = indices[start:start + chunk]
            phi = np.zeros((len(idx), 2, n), dtype=complex)
            phi[np.arange(len(idx)), :, idx] = vecs[start:start + chunk]
            # unit-normalized plane waves on the periodic box
            psi = _ifft(phi) * math.sqrt(n / grid.length)
            for ti, (steps, h) in enumerate(segments):
                if steps:
                    psi = propagate(psi, grid, h, steps, V, k, pairs=_BLOCK)
                projected = _project(psi, grid, k, proj_sign)
                dens = np.sum(np.abs(projected) ** 2, axis=(0, 1))
                # factor 2: the spin partner has the same density
                rho[proj_sign][ti].add(2.0 * dens)
                if joint and mode_sign < 0:
                    joint_acc[ti] += _joint_amplitude(projected, psi - projected)

    window = _default_window(grid, potential)
    out = []
    for ti, t in enumerate(times):
        meta = {
            "projectors": "free-field Lambda_+/- (stated approximation)",
            "n_modes": int(len(indices)),
            "steps": int(sum(s for s, _ in segments[: ti + 1])),
            "dt_max": dt_max,
        }
        jd = None
        if joint:
            jd = np.sum(np.abs(joint_acc[ti]) ** 2, axis=(0, 2))
        out.append(PairDensities(grid, rho[+1][ti].s.copy(), rho[-1][ti].s.copy(), t,
                                 jd, window, meta))
    return out


def _full_spinors(block_states):
    """Both spin partners as 4-spinors from reduced (psi_1, psi_4) arrays."""
    m, _, n = block_states.shape
    full = np.zeros((2 * m, 4, n), dtype=complex)
    full[:m, 0] = block_states[:, 0]
    full[:m, 3] = block_states[:, 1]
    # partner under the swap 1<->2, 3<->4
    full[m:, 1] = block_states[:, 0]
    full[m:, 2] = block_states[:, 1]
    return full


def _joint_amplitude(electron_part, negative_part):
    """sum_n [Lambda_+ U w_n](x)_s [C (Lambda_- U w_n)^*](y)_s' as (4, n, 4, n)."""
    a = _full_spinors(electron_part)
    b = np.einsum("ab,mbn->man", CHARGE_CONJ, np.conj(_full_spinors(negative_part)))
    m, _, n = a.shape
    amp = a.reshape(m, -1).T @ b.reshape(m, -1)
    return amp.reshape(4, n, 4, n)


def pair_mode_sum(grid: Grid1D, potential: PotentialSpec, t: float,
                  k: PhysConsts = ATOMIC, n_modes: Optional[int] = None,
                  joint: bool = False, dt: Optional[float] = None) -> PairDensities:
    if t < 0:
        raise ValueError("t must be non-negative")
    return pair_mode_series(grid, potential, [t], k, n_modes, dt=dt, joint=joint)[0]


def _refine_peak(x, y, i, dx):
    if 0 < i < len(y) - 1:
        y0, y1, y2 = y[i - 1], y[i], y[i + 1]
        denom = y0 - 2 * y1 + y2
        if denom < 0:
            return float(x[i] + 0.5 * (y0 - y2) / denom * dx)
    return float(x[i])


def find_peaks(rho, threshold=0.05, min_separation=3):
    """Indices of local maxima above ``threshold`` times the global maximum.

    Peaks closer than ``min_separation`` grid points to a taller one are
    dropped. Result is ordered by height, tallest first.
    """
    rho = np.asarray(rho, dtype=float)
    top = rho.max()
    if not top > 0:
        return []
    inner = np.arange(1, len(rho) - 1)
    is_max = (rho[inner] >= rho[inner - 1]) & (rho[inner] > rho[inner + 1])
    cand = inner[is_max & (rho[inner] > threshold * top)]
    cand = sorted(cand, key=lambda i: (-rho[i], i))
    keep = []
    for i in cand:
        if all(abs(i - j) >= min_separation for j in keep):
            keep.append(i)
    return keep


def detect_satellites(d: PairDensities, threshold: float = 0.05,
                      min_separation: int = 3, window=None,
                      floor: float = 1e-12) -> SatelliteReport:
    """Locate the main body of rho_e and its satellites.

    Peaks are local maxima above ``threshold`` times the largest one, at
    least ``min_separation`` points apart. The main peak is the largest;
    ``separation`` is measured to the principal (tallest) satellite, and
    ``nearest_separation`` to the closest one, which can be a weak ripple
    lobe. ``gap_depth`` is the deepest point between the main peak and the
    nearest satellite relative to the main peak.

    ``window`` restricts the search to ``lo <= x <= hi``; by default the
    window recorded on ``d`` is used (it excludes the closure ramp of the
    periodic step). Densities never exceeding ``floor`` count as vacuum.
    """
    x = d.grid.x
    rho = np.asarray(d.rho_e, dtype=float)
    window = window if window is not None else d.window
    if window is not None:
        sel = (x >= window[0]) & (x <= window[1])
        x, rho = x[sel], rho[sel]
    if not rho.size or rho.max() <= floor:
        raise NoStructure(f"electron density never exceeds {floor:g}")
    peaks = find_peaks(rho, threshold, min_separation)
    if len(peaks) < 2:
        raise NoStructure(f"found {len(peaks)} peak(s); need a main body and a satellite")
    main = peaks[0]
    xm = _refine_peak(x, rho, main, d.grid.dx)
    sats = sorted(peaks[1:], key=lambda i: abs(x[i] - x[main]))
    sat_x = [_refine_peak(x, rho, i, d.grid.dx) for i in sats]
    principal = max(range(len(sats)), key=lambda j: rho[sats[j]])
    lo, hi = sorted((main, sats[0]))
    gap = float(rho[lo:hi + 1].min() / rho[main])
    return SatelliteReport(
        main_peak_x=xm,
        satellite_xs=sat_x,
        separation=abs(sat_x[principal] - xm),
        gap_depth=gap,
        time=d.time,
        outer_separation=max(abs(s - xm) for s in sat_x),
        peak_heights=[float(rho[i]) for i in [main] + sats],
        nearest_separation=abs(sat_x[0] - xm),
    )


def satellite_speed(runs: Sequence[PairDensities], **detect_kw) -> float:
    """Least-squares slope of the outermost satellite's distance from the main body."""
    if len(runs) < 3:
        raise ValueError("satellite_speed needs at least three time samples")
    reports = [detect_satellites(d, **detect_kw) for d in runs]
    t = np.array([r.time for r in reports])
    s = np.array([r.outer_separation for r in reports])
    if np.ptp(t) <= 0:
        raise ValueError("time samples must differ")
    slope = np.polyfit(t, s, 1)[0]
    return float(slope)


def predicted_amplitude(V0: float, k: PhysConsts = ATOMIC) -> float:
    """hbar c / (2 E_eff) with E_eff = m c^2 + V0 / 2."""
    return k.hbar * k.c / (2 * (k.m * k.c**2 + V0 / 2))


@dataclass
class ScanRow:
    parameter: str
    value: float
    V0: float
    W: float
    separation: float
    gap_depth: float
    predicted: float


def amplitude_vs_field(grid: Grid1D, t: float, V0_list=(), W_fixed=None, W_list=(),
                       V0_fixed=None, k: PhysConsts = ATOMIC, closure_width=None,
                       n_modes=None, **detect_kw):
    """Satellite separation against step height and against step width."""
    supercritical = 2 * k.m * k.c**2
    rows = []
    plan = [("V0", v, v, W_fixed) for v in V0_list] + [("W", w, V0_fixed, w) for w in W_list]
    if V0_list and len(V0_list) < 4:
        raise ValueError("the V0 scan needs at least four points")
    if W_list and len(W_list) < 3:
        raise ValueError("the W scan needs at least three points")
    for name, value, V0, W in plan:
        if V0 is None or W is None:
            raise ValueError(f"{name} scan needs the other parameter fixed")
        if not V0 > supercritical:
            raise ValueError(f"V0={V0!r} is not supercritical (> 2mc^2 = {supercritical!r})")
        pot = PotentialSpec.tanh_step(V0, W, closure_width)
        d = pair_mode_sum(grid, pot, t, k, n_modes)
        rep = detect_satellites(d, **detect_kw)
        rows.append(ScanRow(name, float(value), float(V0), float(W), rep.separation,
                            rep.gap_depth, predicted_amplitude(V0, k)))
    return rows


def is_non_increasing(values, slack=0.0) -> bool:
    return all(b <= a + slack for a, b in zip(values, values[1:]))

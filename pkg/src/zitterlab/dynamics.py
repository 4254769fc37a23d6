"""Spinor wavepackets on a periodic 1D grid.

The Hamiltonian is H = c alpha_x p + beta m c^2 + V(x). With momentum along
x it splits into two identical 2x2 blocks acting on the component pairs
(psi_1, psi_4) and (psi_2, psi_3), each with

    h_block(p) = [[m c^2, c p], [c p, -m c^2]].

All propagation here goes through that block: a Strang step applies half of
the potential phase, the exact per-mode kinetic exponential in momentum space,
then the second half of the potential phase.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field as dc_field, replace
from typing import Callable, Optional, Sequence

import numpy as np
import scipy.fft
from scipy.optimize import minimize_scalar

from .algebra import ALPHA_X, BETA
from .constants import ATOMIC, PhysConsts
from .errors import GridTooCoarse, NoPeak, TooLarge
from .planewave import energy_projectors_grid
from .potentials import PotentialSpec

# component pairs coupled by alpha_x
BLOCKS = ((0, 3), (1, 2))


def thread_count() -> int:
    raw = os.environ.get("ZITTERLAB_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return 1


def _fft(a):
    return scipy.fft.fft(a, axis=-1, workers=thread_count())


def _ifft(a):
    return scipy.fft.ifft(a, axis=-1, workers=thread_count())


@dataclass(frozen=True)
class Grid1D:
    n: int
    x_min: float
    x_max: float

    def __post_init__(self):
        if self.n < 8 or self.n & (self.n - 1):
            raise ValueError(f"grid size must be a power of two >= 8, got {self.n}")
        if not self.x_max > self.x_min:
            raise ValueError("x_max must exceed x_min")

    @classmethod
    def centered(cls, n, length, centre=0.0):
        return cls(n, centre - length / 2, centre + length / 2)

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    @property
    def dx(self) -> float:
        return self.length / self.n

    @property
    def x(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n)

    @property
    def wavenumbers(self) -> np.ndarray:
        return 2 * np.pi * np.fft.fftfreq(self.n, d=self.dx)

    def momenta(self, k: PhysConsts = ATOMIC) -> np.ndarray:
        return k.hbar * self.wavenumbers

    def momentum_cutoff(self, k: PhysConsts = ATOMIC) -> float:
        return k.hbar * math.pi / self.dx


@dataclass(frozen=True)
class SpinorField:
    grid: Grid1D
    values: np.ndarray  # (4, n) complex
    time: float = 0.0

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (4, self.grid.n):
            raise ValueError(f"expected values of shape (4, {self.grid.n}), got {values.shape}")
        object.__setattr__(self, "values", values)

    def density(self) -> np.ndarray:
        return np.sum(np.abs(self.values) ** 2, axis=0)

    def spinor_at(self, i: int) -> np.ndarray:
        return self.values[:, i].copy()


@dataclass
class ObservableSeries:
    label: str
    times: list = dc_field(default_factory=list)
    values: list = dc_field(default_factory=list)

    def append(self, t, v):
        if self.times and not t > self.times[-1]:
            raise ValueError("times must be strictly increasing")
        self.times.append(float(t))
        self.values.append(float(v))

    def __len__(self):
        return len(self.times)

    def as_arrays(self):
        return np.asarray(self.times), np.asarray(self.values)


@dataclass(frozen=True)
class EvolutionConfig:
    dt: float
    n_steps: int
    potential: PotentialSpec = PotentialSpec()
    record_every: int = 1

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if self.n_steps < 1 or self.record_every < 1:
            raise ValueError("n_steps and record_every must be positive")

    def violations(self, grid: Grid1D, k: PhysConsts = ATOMIC) -> list:
        return config_violations(grid, self.dt, self.potential, k)


def max_dt(k: PhysConsts = ATOMIC) -> float:
    """Largest step that still gives 16 steps per rest-frame jitter period."""
    return (2 * math.pi / k.zb_frequency) / 16


def spectral_width(grid: Grid1D, V, k: PhysConsts = ATOMIC) -> float:
    """Width of the discrete spectrum of H on the grid (upper bound)."""
    pmax = grid.momentum_cutoff(k)
    emax = math.hypot(k.m * k.c**2, pmax * k.c)
    V = np.asarray(V, dtype=float)
    spread = float(V.max() - V.min()) if V.size else 0.0
    return 2 * emax + spread


def max_stable_dt(grid: Grid1D, V, k: PhysConsts = ATOMIC, safety: float = 1.0) -> float:
    """Split steps beyond this fold quasi-energies of H onto one another."""
    return safety * 2 * math.pi * k.hbar / spectral_width(grid, V, k)


def config_violations(grid, dt, potential, k=ATOMIC) -> list:
    problems = []
    if dt > max_dt(k) * (1 + 1e-12):
        problems.append(
            f"dt={dt:.6g} exceeds the jitter resolution bound {max_dt(k):.6g}"
            " (period 2*pi*hbar/(2mc^2) over 16)"
        )
    if not grid.momentum_cutoff(k) > 8 * k.m * k.c:
        problems.append(
            f"momentum cutoff pi*hbar/dx={grid.momentum_cutoff(k):.6g} does not exceed"
            f" 8mc={8 * k.m * k.c:.6g}"
        )
    if not potential.is_zero:
        V = potential.sample(grid)
        limit = max_stable_dt(grid, V, k)
        if dt > limit:
            problems.append(
                f"dt={dt:.6g} exceeds the split-step aliasing bound {limit:.6g}"
                " (2*pi*hbar / spectral width)"
            )
    return problems


def block_kinetic(grid: Grid1D, dt: float, k: PhysConsts = ATOMIC):
    """Entries (k00, k01, k11) of exp(-i h_block(p) dt / hbar) per mode.

    The block is symmetric, so k10 == k01.
    """
    p = grid.momenta(k)
    mc2 = k.m * k.c**2
    E = np.sqrt(mc2**2 + (k.c * p) ** 2)
    theta = E * dt / k.hbar
    cos = np.cos(theta)
    s = np.sin(theta) / E
    return cos - 1j * s * mc2, -1j * s * k.c * p, cos + 1j * s * mc2


def _apply_block(phi, kin, pairs=BLOCKS):
    k00, k01, k11 = kin
    for a, b in pairs:
        pa = phi[..., a, :]
        pb = phi[..., b, :]
        na = k00 * pa + k01 * pb
        pb_new = k01 * pa + k11 * pb
        phi[..., a, :] = na
        phi[..., b, :] = pb_new
    return phi


def propagate(values, grid, dt, n_steps, V=None, k=ATOMIC, pairs=BLOCKS,
              record_every=None, on_record: Optional[Callable] = None):
    """Strang-split evolution of raw spinor arrays of shape (..., c, n).

    ``pairs`` names the component pairs coupled by the kinetic block; the
    default covers a full 4-spinor. ``on_record(step, values)`` is called
    every ``record_every`` steps with the current array.
    """
    psi = np.array(values, dtype=complex, copy=True)
    kin = block_kinetic(grid, dt, k)
    half = None
    if V is not None and np.any(V):
        half = np.exp(-0.5j * np.asarray(V, dtype=float) * dt / k.hbar)
    for step in range(1, n_steps + 1):
        if half is not None:
            psi *= half
        phi = _fft(psi)
        _apply_block(phi, kin, pairs)
        psi = _ifft(phi)
        if half is not None:
            psi *= half
        if on_record is not None and record_every and step % record_every == 0:
            on_record(step, psi)
    return psi


def split_step(field: SpinorField, dt: float, potential: PotentialSpec = PotentialSpec(),
               k: PhysConsts = ATOMIC) -> SpinorField:
    V = potential.sample(field.grid)
    values = propagate(field.values, field.grid, dt, 1, V, k)
    return SpinorField(field.grid, values, field.time + dt)


def evolve(field: SpinorField, config: EvolutionConfig, k: PhysConsts = ATOMIC,
           observables: Optional[dict] = None, check=True):
    """Run ``config.n_steps`` split steps, sampling observables along the way.

    ``observables`` maps labels to callables ``f(field) -> float``; the
    default records the mean position. Returns ``(final_field, {label: series})``.
    """
    if check:
        problems = config.violations(field.grid, k)
        if problems:
            raise ValueError("; ".join(problems))
    if observables is None:
        observables = {"mean_x": mean_position}
    series = {name: ObservableSeries(name) for name in observables}

    def record(f):
        for name, fn in observables.items():
            series[name].append(f.time, fn(f))

    record(field)
    t0 = field.time
    V = config.potential.sample(field.grid)

    def on_record(step, values):
        record(SpinorField(field.grid, values, t0 + step * config.dt))

    values = propagate(field.values, field.grid, config.dt, config.n_steps, V, k,
                       record_every=config.record_every, on_record=on_record)
    final = SpinorField(field.grid, values, t0 + config.n_steps * config.dt)
    return final, series


def grid_hamiltonian(grid: Grid1D, V=None, k: PhysConsts = ATOMIC) -> np.ndarray:
    """Dense 4n x 4n hamiltonian, component-major ordering (index s*n + j).

    The momentum operator is the spectral derivative built from an explicit
    unitary DFT matrix.
    """
    n = grid.n
    j = np.arange(n)
    F = np.exp(-2j * np.pi * np.outer(j, j) / n) / math.sqrt(n)
    P = F.conj().T @ (grid.momenta(k)[:, None] * F)
    P = 0.5 * (P + P.conj().T)
    H = k.c * np.kron(ALPHA_X, P) + k.m * k.c**2 * np.kron(BETA, np.eye(n))
    if V is not None:
        H = H + np.kron(np.eye(4), np.diag(np.asarray(V, dtype=float)))
    return H


def dense_evolve_oracle(field: SpinorField, dt: float, n_steps: int,
                        potential: PotentialSpec = PotentialSpec(),
                        k: PhysConsts = ATOMIC) -> SpinorField:
    """Exact propagation exp(-i H t / hbar) by dense eigendecomposition."""
    if field.grid.n > 128:
        raise TooLarge(f"dense oracle is limited to n <= 128, got {field.grid.n}")
    t = dt * n_steps
    H = grid_hamiltonian(field.grid, potential.sample(field.grid), k)
    w, vecs = np.linalg.eigh(H)
    coeff = vecs.conj().T @ field.values.reshape(-1)
    out = vecs @ (np.exp(-1j * w * t / k.hbar) * coeff)
    return SpinorField(field.grid, out.reshape(4, -1), field.time + t)


def norm_squared(field: SpinorField) -> float:
    return float(np.sum(field.density()) * field.grid.dx)


def mean_position(field: SpinorField) -> float:
    return float(np.sum(field.grid.x * field.density()) * field.grid.dx)


def mean_velocity(field: SpinorField, k: PhysConsts = ATOMIC) -> float:
    """<c alpha_x>, which equals d<x>/dt by the Heisenberg equation."""
    v = field.values
    cross = np.conj(v[0]) * v[3] + np.conj(v[1]) * v[2]
    return float(2 * k.c * np.sum(cross.real) * field.grid.dx)


def energy_expectation(field: SpinorField, k: PhysConsts = ATOMIC,
                       potential: PotentialSpec = PotentialSpec()) -> float:
    phi = _fft(field.values)
    kin = k.c * field.grid.momenta(k)
    mc2 = k.m * k.c**2
    hphi = np.empty_like(phi)
    for a, b in BLOCKS:
        hphi[a] = mc2 * phi[a] + kin * phi[b]
        hphi[b] = kin * phi[a] - mc2 * phi[b]
    n = field.grid.n
    kinetic = np.sum(np.conj(phi) * hphi).real * field.grid.dx / n
    V = potential.sample(field.grid)
    return float(kinetic + np.sum(V * field.density()) * field.grid.dx)


def energy_sign_fractions(field: SpinorField, k: PhysConsts = ATOMIC):
    phi = _fft(field.values)  # (4, n)
    plus, _ = energy_projectors_grid(field.grid.momenta(k), k)
    proj = np.einsum("kab,bk->ak", plus, phi)
    total = float(np.sum(np.abs(phi) ** 2))
    f_plus = float(np.sum(np.abs(proj) ** 2)) / total
    f_minus = float(np.sum(np.abs(phi - proj) ** 2)) / total
    return f_plus, f_minus


DEFAULT_BASE_SPINOR = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)


def init_gaussian(grid: Grid1D, x0: float, p0: float, sigma_x: float,
                  mix=(1.0, 0.0), k: PhysConsts = ATOMIC,
                  base_spinor=DEFAULT_BASE_SPINOR) -> SpinorField:
    """Gaussian packet with prescribed weights on the two energy branches.

    Every momentum component carries the spinor
    c_plus Lambda_+ chi / |Lambda_+ chi| + c_minus Lambda_- chi / |Lambda_- chi|
    where chi is ``base_spinor``. The default chi = (1,0,0,1)/sqrt(2) is the
    +c eigenstate of c alpha_x, so an equal mix starts out moving at c.
    """
    c_plus, c_minus = complex(mix[0]), complex(mix[1])
    weight = abs(c_plus) ** 2 + abs(c_minus) ** 2
    if abs(weight - 1) > 1e-10:
        raise ValueError(f"|c_plus|^2 + |c_minus|^2 = {weight!r}, expected 1")
    if sigma_x < 4 * grid.dx:
        raise GridTooCoarse(f"sigma_x={sigma_x!r} is below 4*dx={4 * grid.dx!r}")
    if x0 - 6 * sigma_x < grid.x_min or x0 + 6 * sigma_x > grid.x_max:
        raise GridTooCoarse("wavepacket extends past the grid (needs x0 +- 6 sigma inside)")
    x = grid.x
    envelope = np.exp(-((x - x0) ** 2) / (4 * sigma_x**2) + 1j * p0 * x / k.hbar)
    phi = _fft(envelope)
    plus, minus = energy_projectors_grid(grid.momenta(k), k)
    chi = np.asarray(base_spinor, dtype=complex)
    up = plus @ chi
    down = minus @ chi
    up /= np.linalg.norm(up, axis=1, keepdims=True)
    down /= np.linalg.norm(down, axis=1, keepdims=True)
    spinors = c_plus * up + c_minus * down  # (n, 4)
    values = _ifft(spinors.T * phi[None, :])
    field = SpinorField(grid, values)
    return SpinorField(grid, values / math.sqrt(norm_squared(field)))


def plane_wave(grid: Grid1D, mode: int, spinor, k: PhysConsts = ATOMIC) -> SpinorField:
    """Normalized plane wave exp(i k_mode x) times a fixed spinor."""
    spinor = np.asarray(spinor, dtype=complex)
    spinor = spinor / np.linalg.norm(spinor)
    kx = grid.wavenumbers[mode]
    wave = np.exp(1j * kx * (grid.x - grid.x_min)) / math.sqrt(grid.length)
    return SpinorField(grid, spinor[:, None] * wave[None, :])


@dataclass(frozen=True)
class ZitterFit:
    frequency: float
    amplitude: float
    floor: float
    peak_ratio: float


def _detrend(t, y):
    A = np.vstack([t - t.mean(), np.ones_like(t)]).T
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    return y - A @ coef, coef[0]


def drift_velocity(series: ObservableSeries) -> float:
    """Least-squares slope of a series."""
    t, y = series.as_arrays()
    return float(_detrend(t, y)[1])


def zb_fit(series: ObservableSeries, k: PhysConsts = ATOMIC, min_periods: float = 8.0,
           floor_factor: float = 5.0, pad: int = 8) -> ZitterFit:
    """Dominant oscillation of a detrended, uniformly sampled series.

    The frequency is the maximum of |sum y_n exp(-i w t_n)| refined off the
    zero-padded FFT grid; the amplitude is twice its modulus over N.
    """
    t, y = series.as_arrays()
    if len(t) < 16:
        raise ValueError("zb_fit needs at least 16 samples")
    steps = np.diff(t)
    h = float(np.mean(steps))
    if np.max(np.abs(steps - h)) > 1e-6 * h:
        raise ValueError("zb_fit needs uniform sampling")
    span = t[-1] - t[0] + h
    if span * k.zb_frequency / (2 * np.pi) < min_periods:
        raise ValueError(
            f"series spans {span * k.zb_frequency / (2 * np.pi):.2f} rest-frame periods,"
            f" need {min_periods}"
        )
    resid, _ = _detrend(t, y)
    n = len(resid)
    plain = np.abs(np.fft.rfft(resid))[1:]
    floor = float(np.median(plain))
    padded = np.abs(np.fft.rfft(resid, n=pad * n))
    padded[0] = 0.0
    ipk = int(np.argmax(padded))
    w_grid = 2 * np.pi * ipk / (pad * n * h)
    dw = 2 * np.pi / (pad * n * h)
    tt = t - t[0]

    def neg_mag(w):
        return -abs(np.sum(resid * np.exp(-1j * w * tt)))

    res = minimize_scalar(neg_mag, bounds=(max(w_grid - dw, 0.0), w_grid + dw),
                          method="bounded", options={"xatol": dw * 1e-6})
    w = float(res.x)
    mag = -float(res.fun)
    amplitude = 2 * mag / n
    ratio = float(plain.max() / floor) if floor > 0 else math.inf
    if ratio < floor_factor or amplitude <= 1e-6 * k.compton:
        raise NoPeak(
            f"no spectral line: peak/median = {ratio:.3g}, amplitude = {amplitude:.3g}",
            amplitude=amplitude, frequency=w,
        )
    return ZitterFit(w, amplitude, floor, ratio)


def amplitude_at(series: ObservableSeries, omega: float) -> float:
    """Detrended oscillation amplitude at a fixed angular frequency."""
    t, y = series.as_arrays()
    resid, _ = _detrend(t, y)
    return float(2 * abs(np.sum(resid * np.exp(-1j * omega * (t - t[0])))) / len(t))

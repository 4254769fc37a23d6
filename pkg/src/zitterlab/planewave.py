"""Fixed-momentum structures for a free electron moving along x.

Everything here works on the 4x4 momentum-space Hamiltonian

    h(p) = c alpha_x p + beta m c^2,

which squares to E_p^2 times the identity. That identity gives closed forms
for h^-1 = h / E_p^2 and for exp(-i h t / hbar).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import ALPHA_X, BETA, I4, alpha, hermiticity_defect
from .constants import ATOMIC, PhysConsts
from .errors import BadNormalization, SingularH

# Negative-energy spin labels at p = 0: (0,0,1,0) is up, (0,0,0,1) is down.
SPIN_UP = +1
SPIN_DOWN = -1


def energy(p: float, k: PhysConsts = ATOMIC) -> float:
    return math.sqrt((k.m * k.c**2) ** 2 + (p * k.c) ** 2)


def velocity_from_momentum(p: float, k: PhysConsts = ATOMIC) -> float:
    # c^2 p / E written to stay accurate for |p| >> mc
    return p * k.c / math.hypot(k.m * k.c, p)


def hamiltonian(p: float, k: PhysConsts = ATOMIC) -> np.ndarray:
    return k.c * p * ALPHA_X + k.m * k.c**2 * BETA


def free_eigenspinor(p: float, energy_sign: int, spin: int, k: PhysConsts = ATOMIC):
    """Normalized eigenspinor of h(p) with eigenvalue ``energy_sign * E_p``.

    At p = 0 the positive-energy spinors are (1,0,0,0) (up) and (0,1,0,0)
    (down); the negative-energy ones are (0,0,1,0) (up) and (0,0,0,1) (down).
    """
    E = energy(p, k)
    mc2 = k.m * k.c**2
    cp = k.c * p
    norm = 1.0 / math.sqrt(2 * E * (E + mc2))
    u = np.zeros(4, dtype=complex)
    if energy_sign > 0:
        if spin > 0:
            u[0], u[3] = E + mc2, cp
        else:
            u[1], u[2] = E + mc2, cp
    else:
        if spin > 0:
            u[1], u[2] = -cp, E + mc2
        else:
            u[0], u[3] = -cp, E + mc2
    return u * norm


def energy_projector(p: float, sign: int, k: PhysConsts = ATOMIC) -> np.ndarray:
    E = energy(p, k)
    return (E * I4 + sign * hamiltonian(p, k)) / (2 * E)


def energy_projectors_grid(p, k: PhysConsts = ATOMIC):
    """Vectorized Lambda_+ / Lambda_- for an array of momenta, shape (n, 4, 4)."""
    p = np.asarray(p, dtype=float)
    E = np.sqrt((k.m * k.c**2) ** 2 + (k.c * p) ** 2)
    h = (k.c * p)[:, None, None] * ALPHA_X + (k.m * k.c**2) * BETA
    plus = (E[:, None, None] * I4 + h) / (2 * E[:, None, None])
    return plus, I4 - plus


@dataclass(frozen=True)
class VelocityEigenstateSpec:
    axis: str
    a: complex
    b: complex
    sign: int = +1

    def __post_init__(self):
        if self.axis not in ("x", "y", "z"):
            raise ValueError(f"axis must be x, y or z, got {self.axis!r}")
        if self.sign not in (+1, -1):
            raise ValueError("sign must be +1 or -1")


def velocity_eigenstate(spec: VelocityEigenstateSpec) -> np.ndarray:
    """Eigenstate of c alpha_axis with eigenvalue sign * c.

    The +c columns are (a,b,b,a), (a,b,-ib,ia) and (a,b,a,-b) for x, y, z;
    the -c partners flip the sign of the lower pair.
    """
    a, b, s = complex(spec.a), complex(spec.b), spec.sign
    weight = abs(a) ** 2 + abs(b) ** 2
    if abs(weight - 0.5) > 1e-10:
        raise BadNormalization(f"|a|^2 + |b|^2 = {weight!r}, expected 1/2")
    if spec.axis == "x":
        lower = (b, a)
    elif spec.axis == "y":
        lower = (-1j * b, 1j * a)
    else:
        lower = (a, -b)
    return np.array([a, b, s * lower[0], s * lower[1]], dtype=complex)


def energy_content(psi, p: float = 0.0, k: PhysConsts = ATOMIC):
    psi = np.asarray(psi, dtype=complex)
    plus = energy_projector(p, +1, k) @ psi
    minus = energy_projector(p, -1, k) @ psi
    return float(np.vdot(plus, plus).real), float(np.vdot(minus, minus).real)


def velocity_expectation(psi, axis="x", k: PhysConsts = ATOMIC) -> float:
    psi = np.asarray(psi, dtype=complex)
    value = k.c * np.vdot(psi, alpha(axis) @ psi)
    return float(value.real)


def _inverse_h(p, k):
    h = hamiltonian(p, k)
    E2 = energy(p, k) ** 2
    # det h = E^4 because h^2 = E^2 I
    if E2 * E2 < 1e-30:
        raise SingularH(f"h(p) is singular at p={p!r}")
    return h / E2


def propagator(p: float, t: float, k: PhysConsts = ATOMIC, factor: float = 1.0):
    """exp(-i factor h(p) t / hbar) = cos(theta) I - i sin(theta) h / E."""
    E = energy(p, k)
    theta = factor * E * t / k.hbar
    return math.cos(theta) * I4 - 1j * math.sin(theta) * hamiltonian(p, k) / E


def position_operator_t(t: float, p: float, k: PhysConsts = ATOMIC) -> np.ndarray:
    """Momentum-space x(t) with the integration constant set to zero.

    x(t) = c^2 h^-1 p t + (i hbar c / 2)(alpha_x - c h^-1 p) h^-1 exp(-2iht/hbar)
    """
    hinv = _inverse_h(p, k)
    drift = k.c**2 * p * t * hinv
    jitter = (
        0.5j * k.hbar * k.c * (ALPHA_X - k.c * p * hinv) @ hinv @ propagator(p, t, k, 2.0)
    )
    return drift + jitter


def classical_velocity_matrix(p: float, k: PhysConsts = ATOMIC) -> np.ndarray:
    """The t-coefficient c^2 h^-1 p of the drift term."""
    return k.c**2 * p * _inverse_h(p, k)


def xdagx_eigenvalue(E: float, k: PhysConsts = ATOMIC) -> float:
    if E < k.m * k.c**2 * (1 - 1e-12):
        raise ValueError(f"energy {E!r} is below the rest energy")
    return (k.hbar * k.c) ** 2 / (4 * E**2)


def fw_correction(p: float, k: PhysConsts = ATOMIC) -> np.ndarray:
    """Terms the Foldy-Wouthuysen mean position adds to x, taken as printed.

    In one dimension the sigma x p piece vanishes, leaving
    hbar c [i beta alpha_x / (2E) - i beta alpha_x c|p| / (2E (E + mc^2))].
    Note that i beta alpha_x is itself hermitian.
    """
    E = energy(p, k)
    mc2 = k.m * k.c**2
    iba = 1j * BETA @ ALPHA_X
    return k.hbar * k.c * (iba / (2 * E) - iba * k.c * abs(p) / (2 * E * (E + mc2)))


def fw_position_operator(p: float, k: PhysConsts = ATOMIC, t: float = 0.0):
    return position_operator_t(t, p, k) + fw_correction(p, k)


def fw_position_defect(p: float, k: PhysConsts = ATOMIC, t: float = 0.0) -> float:
    """Hermiticity defect of X = x(t) + correction at momentum p."""
    return hermiticity_defect(fw_position_operator(p, k, t))

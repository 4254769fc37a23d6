"""Dirac matrices in the standard representation and small hermitian algebra.

Mat4 values are ``(4, 4)`` complex numpy arrays and spinors are ``(4,)``
complex arrays.
"""
from __future__ import annotations

import numpy as np

from .errors import NotHermitian

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
Z2 = np.zeros((2, 2), dtype=complex)


def _block(a, b, c, d):
    return np.block([[a, b], [c, d]])


def dirac_matrices():
    """Return ``(alphas, beta)`` with ``alphas = (alpha_x, alpha_y, alpha_z)``."""
    alphas = tuple(_block(Z2, s, s, Z2) for s in PAULI)
    beta = _block(I2, Z2, Z2, -I2)
    for m in (*alphas, beta):
        m.setflags(write=False)
    return alphas, beta


ALPHAS, BETA = dirac_matrices()
ALPHA_X, ALPHA_Y, ALPHA_Z = ALPHAS
AXES = {"x": 0, "y": 1, "z": 2}


def alpha(axis) -> np.ndarray:
    if isinstance(axis, str):
        axis = AXES[axis]
    return ALPHAS[axis]


def anticommutator(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return a @ b + b @ a


def hermiticity_defect(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a - a.conj().T)))


def eigen_hermitian(a, tol=1e-10):
    """Eigen-decomposition of a hermitian matrix.

    Eigenvalues come back ascending; eigenvectors are the columns of the
    second return value. Raises NotHermitian if ``a`` is off by more than
    ``tol``.
    """
    a = np.asarray(a, dtype=complex)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise NotHermitian(f"hermiticity defect {defect:.3e} exceeds {tol:.1e}")
    # symmetrize so roundoff in the input cannot leak into the spectrum
    w, v = np.linalg.eigh(0.5 * (a + a.conj().T))
    return w, v


def spectrum(a) -> np.ndarray:
    return eigen_hermitian(a)[0]

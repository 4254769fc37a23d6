import numpy as np
import pytest
from hypothesis import given, settings

from conftest import hermitian_4x4
from zitterlab.algebra import (
    ALPHA_X,
    ALPHA_Y,
    ALPHA_Z,
    ALPHAS,
    BETA,
    I4,
    alpha,
    anticommutator,
    dirac_matrices,
    eigen_hermitian,
    hermiticity_defect,
    spectrum,
)
from zitterlab.errors import NotHermitian


def test_beta_is_diagonal():
    np.testing.assert_array_equal(BETA, np.diag([1, 1, -1, -1]))


def test_alpha_x_first_row():
    np.testing.assert_array_equal(ALPHA_X[0], [0, 0, 0, 1])


def test_traceless():
    for m in (*ALPHAS, BETA):
        assert abs(np.trace(m)) == 0


def test_matrices_are_read_only():
    alphas, beta = dirac_matrices()
    with pytest.raises(ValueError):
        beta[0, 0] = 2


def test_alpha_lookup_by_name():
    assert alpha("y") is ALPHA_Y
    assert alpha(2) is ALPHA_Z


@pytest.mark.parametrize("i", range(3))
@pytest.mark.parametrize("j", range(3))
def test_anticommutators(i, j):
    expected = 2 * I4 if i == j else np.zeros((4, 4))
    assert np.abs(anticommutator(ALPHAS[i], ALPHAS[j]) - expected).max() <= 1e-12
    assert np.abs(anticommutator(ALPHAS[i], BETA)).max() <= 1e-12


def test_beta_squares_to_one():
    assert np.abs(BETA @ BETA - I4).max() <= 1e-12


def test_hermiticity_defect_examples():
    assert hermiticity_defect(BETA) == 0
    assert hermiticity_defect(ALPHA_Y) == 0
    # i alpha_x is antihermitian: a - a^dagger = 2a
    assert hermiticity_defect(1j * ALPHA_X) == pytest.approx(2.0)


@pytest.mark.parametrize("m", [ALPHA_X, ALPHA_Y, ALPHA_Z, BETA])
def test_spectrum_is_plus_minus_one(m):
    np.testing.assert_allclose(spectrum(m), [-1, -1, 1, 1], atol=1e-12)


def test_alpha_x_plus_one_eigenvector():
    w, v = eigen_hermitian(ALPHA_X)
    plus = v[:, w > 0]
    target = np.array([1, 0, 0, 1]) / np.sqrt(2)
    # the +1 eigenspace is two-dimensional; target must lie inside it
    proj = plus @ plus.conj().T
    np.testing.assert_allclose(proj @ target, target, atol=1e-12)


def test_not_hermitian_raises():
    with pytest.raises(NotHermitian):
        eigen_hermitian(1j * ALPHA_X)


@settings(max_examples=200, deadline=None)
@given(hermitian_4x4())
def test_random_hermitian_reconstruction(a):
    w, v = eigen_hermitian(a)
    assert np.all(np.diff(w) >= 0)
    np.testing.assert_allclose(v.conj().T @ v, I4, atol=1e-10)
    scale = max(1.0, np.abs(a).max())
    assert np.abs(v @ np.diag(w) @ v.conj().T - a).max() <= 1e-9 * scale
    assert np.abs(a @ v - v * w).max() <= 1e-10 * scale

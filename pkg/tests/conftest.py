import math

import numpy as np
import pytest
from hypothesis import strategies as st

from zitterlab.constants import ATOMIC

C = ATOMIC.c

# lines collected by the acceptance module, printed after the run
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)


@st.composite
def complex_numbers(draw, scale=1.0):
    return complex(draw(finite), draw(finite)) * scale / 1e3


@st.composite
def hermitian_4x4(draw):
    re = np.array(draw(st.lists(finite, min_size=16, max_size=16))).reshape(4, 4)
    im = np.array(draw(st.lists(finite, min_size=16, max_size=16))).reshape(4, 4)
    a = re + 1j * im
    return (a + a.conj().T) / 2


@st.composite
def unit_spinors(draw):
    parts = draw(st.lists(st.floats(-1, 1), min_size=8, max_size=8))
    v = np.array(parts[:4]) + 1j * np.array(parts[4:])
    norm = np.linalg.norm(v)
    if norm < 1e-3:
        v = np.array([1, 0, 0, 0], dtype=complex)
        norm = 1.0
    return v / norm


@st.composite
def ab_pairs(draw):
    """(a, b) with |a|^2 + |b|^2 = 1/2 and arbitrary phases."""
    theta = draw(st.floats(0, math.pi / 2))
    pa = draw(st.floats(0, 2 * math.pi))
    pb = draw(st.floats(0, 2 * math.pi))
    r = math.sqrt(0.5)
    return r * math.cos(theta) * np.exp(1j * pa), r * math.sin(theta) * np.exp(1j * pb)


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)

import numpy as np
import pytest

ACCEPTANCE_LINES = []

S = 1 / np.sqrt(2)
BELL_KETS = {
    "phi+": S * np.array([1, 0, 0, 1]),
    "phi-": S * np.array([1, 0, 0, -1]),
    "psi+": S * np.array([0, 1, 1, 0]),
    "psi-": S * np.array([0, 1, -1, 0]),
}


def projector(ket):
    ket = np.asarray(ket, dtype=complex)
    return np.outer(ket, ket.conj())


@pytest.fixture
def bell_rho():
    # |00> - |11> over sqrt 2
    return np.array(
        [[0.5, 0, 0, -0.5], [0, 0, 0, 0], [0, 0, 0, 0], [-0.5, 0, 0, 0.5]], dtype=complex
    )


@pytest.fixture
def bell_x():
    x = np.zeros(16)
    x[0], x[5], x[10], x[15] = -0.5, 0.5, -0.5, -0.5
    return x


@pytest.fixture
def zz_x():
    x = np.zeros(16)
    x[[0, 3, 12, 15]] = -0.5
    return x


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

"""Reference computations that avoid the production code paths."""

import itertools

import numpy as np

PAULI = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def xi_matrix(digits):
    m = np.array([[1.0 + 0j]])
    for d in digits:
        m = np.kron(m, PAULI[d])
    return -0.5j * m


def brute_decompose(rho):
    """x_a = Tr(i rho xi_a^dagger) / 2^(n-2) by explicit loops."""
    dim = rho.shape[0]
    n = int(round(np.log2(dim)))
    out = []
    for digits in itertools.product(range(4), repeat=n):
        out.append(np.trace(1j * rho @ xi_matrix(digits).conj().T) / 2 ** (n - 2))
    out = np.array(out)
    assert np.max(np.abs(out.imag)) < 1e-12
    return out.real


def brute_conjugate(u, x):
    """Coefficients of U (i rho) U^dagger, via explicit matrices."""
    n = int(round(np.log(len(x)) / np.log(4)))
    m = sum(c * xi_matrix(d) for c, d in zip(x, itertools.product(range(4), repeat=n)))
    return brute_decompose(-1j * (u @ m @ u.conj().T))


def haar_su2(rng):
    q = rng.standard_normal(4)
    q /= np.linalg.norm(q)
    a, b, c, d = q
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def random_local_unitary(n, rng):
    u = np.array([[1.0 + 0j]])
    for _ in range(n):
        u = np.kron(u, haar_su2(rng))
    return u


def random_density(n, rng, rank=None):
    dim = 2**n
    rank = rank or dim
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real

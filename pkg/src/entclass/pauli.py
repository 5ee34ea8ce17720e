"""Pauli-tensor basis of u(2^n) and the coefficient chart.

Every skew-Hermitian ``2^n x 2^n`` matrix ``i rho`` is written as

    i rho = sum_a x_a xi_a,    xi_a = -(i/2) sigma_{a_1} (x) ... (x) sigma_{a_n}

with real coefficients ``x_a``.  Multi-indices ``a = (a_1, ..., a_n)`` are
linearised base-4 big-endian, so ``a_1`` is the most significant digit and
matches the first tensor factor.  A coefficient vector therefore has length
``4**n``; reshaping it to ``(4,) * n`` recovers the multi-index.

The library stores ``rho`` itself and applies the factor ``i`` inside the
formulas; :func:`to_skew` gives the ``i rho`` matrix when it is needed.
"""

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import InvalidIndexError, ValidationError

DEFAULT_TOL = 1e-9

SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

# Pair index p = 2*r + c runs over the entries (r, c) of one 2x2 factor.
# _TRACE_ROWS[k, p] = sigma_k[c, r], so contracting gives Tr(rho sigma_k).
_TRACE_ROWS = np.transpose(SIGMA, (0, 2, 1)).reshape(4, 4)
# _ENTRY_COLS[p, k] = sigma_k[r, c]
_ENTRY_COLS = SIGMA.reshape(4, 4).T


def num_qubits(length, base=4):
    """Return ``n`` such that ``base**n == length``; raise otherwise."""
    n = 0
    size = 1
    while size < length:
        size *= base
        n += 1
    if size != length or n < 1:
        raise ValidationError(f"size {length} is not a positive power of {base}")
    return n


def digits_to_index(digits):
    """Linear position of a Pauli multi-index (big-endian base 4)."""
    digits = tuple(int(d) for d in digits)
    if not digits:
        raise InvalidIndexError("a Pauli index needs at least one digit")
    idx = 0
    for d in digits:
        if d not in (0, 1, 2, 3):
            raise InvalidIndexError(f"Pauli digit {d} not in {{0, 1, 2, 3}}")
        idx = 4 * idx + d
    return idx


def index_to_digits(idx, n):
    """Inverse of :func:`digits_to_index`."""
    if not 0 <= idx < 4**n:
        raise InvalidIndexError(f"linear index {idx} out of range for n={n}")
    return tuple(int(d) for d in np.unravel_index(idx, (4,) * n))


def index_label(idx, n):
    """Human-readable label such as ``'x_03'``."""
    return "x_" + "".join(str(d) for d in index_to_digits(idx, n))


def pauli_tensor(index):
    """The basis element ``xi_index = -(i/2) sigma_{k_1} (x) ... (x) sigma_{k_n}``.

    Parameters
    ----------
    index : sequence of int
        Digits ``k_1 ... k_n``, each in ``{0, 1, 2, 3}``.

    Returns
    -------
    ndarray
        Complex skew-Hermitian ``2^n x 2^n`` matrix.
    """
    digits = tuple(index)
    digits_to_index(digits)  # validates
    out = np.array([[1.0 + 0j]])
    for d in digits:
        out = np.kron(out, SIGMA[d])
    return -0.5j * out


@lru_cache(maxsize=8)
def _basis_cached(n):
    basis = np.stack([pauli_tensor(index_to_digits(a, n)) for a in range(4**n)])
    basis.setflags(write=False)
    return basis


def pauli_basis(n):
    """All ``4**n`` basis matrices stacked in index order (read-only array)."""
    if n < 1:
        raise ValidationError("qubit count must be >= 1")
    return _basis_cached(n)


def kronecker_sum(a, b):
    """``A (+) B = A (x) 1 + 1 (x) B`` for square ``A`` and ``B``."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValidationError("kronecker_sum needs two square matrices")
    return np.kron(a, np.eye(b.shape[0])) + np.kron(np.eye(a.shape[0]), b)


def trace_coordinate(n):
    """Value of ``x_{0...0}`` for any unit-trace operator on ``n`` qubits."""
    return -(2.0 ** (1 - n))


def _square_dim(m):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {m.shape}")
    return num_qubits(m.shape[0], base=2)


def _pauli_traces(m, n):
    """``Tr(m sigma_a)`` for every multi-index ``a``, via per-qubit contraction."""
    t = m.reshape((2,) * (2 * n))
    order = [ax for q in range(n) for ax in (q, n + q)]
    t = t.transpose(order).reshape((4,) * n)
    for _ in range(n):
        t = np.tensordot(t, _TRACE_ROWS, axes=([0], [1]))
    return t.reshape(-1)


def decompose(rho, tol=DEFAULT_TOL):
    """Coefficients of ``i rho`` over the xi-basis.

    ``x_a = Tr(i rho xi_a^dagger) / 2^(n-2)``, computed with an O(n 4^n)
    per-qubit Pauli transform.

    Raises
    ------
    ValidationError
        If ``rho`` is not square of size ``2^n`` or not Hermitian within ``tol``.
    """
    rho = np.asarray(rho, dtype=complex)
    n = _square_dim(rho)
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValidationError("matrix is not Hermitian within tolerance")
    traces = _pauli_traces(rho, n)
    if np.max(np.abs(traces.imag)) > tol:
        raise ValidationError("decomposition left an imaginary residue")
    return -(2.0 ** (1 - n)) * traces.real


def skew_coefficients(m, tol=DEFAULT_TOL):
    """Coefficients of a skew-Hermitian matrix ``m`` (i.e. ``m = i rho``)."""
    return decompose(-1j * np.asarray(m, dtype=complex), tol=tol)


def reconstruct(x):
    """Density matrix ``rho = -i sum_a x_a xi_a`` from real coefficients."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ValidationError("coefficient vector must be one-dimensional")
    n = num_qubits(x.size)
    t = x.reshape((4,) * n).astype(complex)
    for _ in range(n):
        t = np.tensordot(t, _ENTRY_COLS, axes=([0], [1]))
    t = t.reshape((2,) * (2 * n))
    order = [2 * q for q in range(n)] + [2 * q + 1 for q in range(n)]
    dim = 2**n
    return -0.5 * t.transpose(order).reshape(dim, dim)


def to_skew(x):
    """The skew-Hermitian matrix ``i rho = sum_a x_a xi_a``."""
    return 1j * reconstruct(x)


class DensityReport(NamedTuple):
    hermitian: bool
    unit_trace: bool
    psd: bool
    min_eigenvalue: float

    @property
    def physical(self):
        return self.hermitian and self.unit_trace and self.psd


def validate_density(rho, tol=DEFAULT_TOL):
    """Check Hermiticity, unit trace and positivity of ``rho``.

    Eigenvalues come from the Hermitian part, so a slightly non-Hermitian
    input still gets a meaningful ``min_eigenvalue``.
    """
    rho = np.asarray(rho, dtype=complex)
    _square_dim(rho)
    hermitian = bool(np.max(np.abs(rho - rho.conj().T)) <= tol)
    unit_trace = bool(abs(np.trace(rho) - 1.0) <= tol)
    evals = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    min_ev = float(evals[0])
    return DensityReport(hermitian, unit_trace, min_ev >= -tol, min_ev)

"""Matrix Lie group primitives for U(2^n) and its local subgroup.

Conventions
-----------
The little adjoint is ``ad_v(u) = [v, u]``, so that
``Ad_{exp(t v)} = exp(t ad_v)`` holds with no sign.  In the xi-basis of
u(2) the bracket is ``[xi_j, xi_k] = eps_{jkp} xi_p`` and the matrix of
``ad_{xi_j}`` acting on coefficient columns is ``0 (+) L_j``.

A local algebra element (an element of su(2) (+) ... (+) su(2)) is held as
an ``(n, 3)`` real array ``a`` whose row ``k`` gives the coefficients of
``xi_1, xi_2, xi_3`` acting on qubit ``k``.
"""

import numpy as np
import scipy.linalg

from .errors import ValidationError
from .pauli import SIGMA, pauli_tensor, skew_coefficients

UNITARY_TOL = 1e-9

# L_j[k, p] = eps_{j p k}: (L_j y) = e_j x y
SO3_BASIS = np.array(
    [
        [[0, 0, 0], [0, 0, -1], [0, 1, 0]],
        [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
        [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
    ],
    dtype=float,
)
SO3_BASIS.setflags(write=False)


def matrix_exp(m):
    """Matrix exponential (scaling and squaring with Pade approximants)."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError("matrix_exp needs a square matrix")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix_exp input has non-finite entries")
    return scipy.linalg.expm(m)


def commutator(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"commutator shape mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def is_unitary(u, tol=UNITARY_TOL):
    u = np.asarray(u)
    return u.ndim == 2 and u.shape[0] == u.shape[1] and bool(
        np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tol
    )


def big_adjoint(u, m, tol=UNITARY_TOL):
    """``Ad_U(m) = U m U^dagger``."""
    u = np.asarray(u, dtype=complex)
    m = np.asarray(m, dtype=complex)
    if not is_unitary(u, tol):
        raise ValidationError("big_adjoint needs a unitary U")
    if m.shape != u.shape:
        raise ValidationError(f"shape mismatch: U {u.shape}, m {m.shape}")
    return u @ m @ u.conj().T


def little_adjoint_matrix(j):
    """Matrix of ``ad_{xi_j}`` on the basis ``(xi_0, xi_1, xi_2, xi_3)``.

    Assembled column by column from the brackets ``[xi_j, xi_k]``; for
    ``j`` in 1..3 this reproduces ``0 (+) L_j`` exactly.
    """
    if j not in (0, 1, 2, 3):
        raise ValidationError(f"axis {j} not in 0..3")
    xi_j = pauli_tensor((j,))
    cols = [skew_coefficients(commutator(xi_j, pauli_tensor((k,)))) for k in range(4)]
    return np.stack(cols, axis=1) + 0.0


def adjoint_matrix(a):
    """``ad_{a . xi}`` on u(2) as a 4x4 real matrix."""
    a = np.asarray(a, dtype=float).reshape(3)
    return sum(a[j] * little_adjoint_matrix(j + 1) for j in range(3))


def as_local_element(v, n=None):
    """Coerce ``v`` (flat ``3n`` or ``(n, 3)``) to an ``(n, 3)`` float array."""
    v = np.asarray(v, dtype=float)
    if v.ndim == 1:
        if v.size % 3:
            raise ValidationError("local element length must be a multiple of 3")
        v = v.reshape(-1, 3)
    if v.ndim != 2 or v.shape[1] != 3 or v.shape[0] < 1:
        raise ValidationError(f"local element must have shape (n, 3), got {v.shape}")
    if n is not None and v.shape[0] != n:
        raise ValidationError(f"local element has {v.shape[0]} slots, expected {n}")
    return v


def embed(v):
    """The matrix ``sum_k sum_j a^(k)_j xi_{0..j..0}`` (digit ``j`` in slot ``k``)."""
    v = as_local_element(v)
    n = v.shape[0]
    out = np.zeros((2**n, 2**n), dtype=complex)
    for k in range(n):
        for j in range(3):
            if v[k, j]:
                digits = [0] * n
                digits[k] = j + 1
                out += v[k, j] * pauli_tensor(digits)
    return out


def su2_exp(a):
    """``exp(a . xi)`` in closed form: ``cos(|a|/2) I - i sin(|a|/2) (a/|a|) . sigma``."""
    a = np.asarray(a, dtype=float).reshape(3)
    theta = np.linalg.norm(a)
    if theta == 0.0:
        return np.eye(2, dtype=complex)
    axis = a / theta
    gen = np.tensordot(axis, SIGMA[1:], axes=1)
    return np.cos(theta / 2) * np.eye(2) - 1j * np.sin(theta / 2) * gen


def local_factors(v):
    """The SU(2) factors ``exp(a^(k) . xi)``, one per qubit."""
    return [su2_exp(row) for row in as_local_element(v)]


def local_exp(v):
    """Local unitary ``exp(a^(1).xi) (x) ... (x) exp(a^(n).xi)``."""
    out = np.array([[1.0 + 0j]])
    for f in local_factors(v):
        out = np.kron(out, f)
    return out


def hat(a):
    """``a . L``, the skew-symmetric matrix with ``hat(a) y = a x y``."""
    return np.tensordot(np.asarray(a, dtype=float), SO3_BASIS, axes=1)


def rotation_matrix(a):
    """``exp(a . L)`` by the Rodrigues formula."""
    a = np.asarray(a, dtype=float).reshape(3)
    theta = np.linalg.norm(a)
    k = hat(a)
    if theta < 1e-8:
        return np.eye(3) + k + 0.5 * k @ k
    return (
        np.eye(3)
        + (np.sin(theta) / theta) * k
        + ((1 - np.cos(theta)) / theta**2) * k @ k
    )


def so3_left_jacobian(a):
    """Left Jacobian of the rotation-vector chart.

    ``d/de exp((a + e b) . L) |_{e=0} = hat(J(a) b) exp(a . L)``.
    """
    a = np.asarray(a, dtype=float).reshape(3)
    theta = np.linalg.norm(a)
    k = hat(a)
    if theta < 1e-6:
        return np.eye(3) + 0.5 * k + k @ k / 6.0
    return (
        np.eye(3)
        + ((1 - np.cos(theta)) / theta**2) * k
        + ((theta - np.sin(theta)) / theta**3) * k @ k
    )

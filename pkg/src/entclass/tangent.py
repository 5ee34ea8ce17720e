"""Infinitesimal local action on coefficient space and orbit dimensions.

For a local algebra element ``v = sum_k a^(k) . xi_(slot k)`` the tangent
vector ``Omega(v)`` at ``i rho`` is ``[v, i rho]``.  In coordinates this is
a sum over slots: fixing every digit except slot ``k``, the 3-block of
coefficients with slot-``k`` digit in (1, 2, 3) is mapped to
``a^(k) x block`` (right-hand cross product).  The trace coordinate and
every block with a 0 in slot ``k`` are untouched by that slot.
"""

import numpy as np

from .errors import ValidationError
from .lie import as_local_element, big_adjoint, commutator, embed, local_exp, rotation_matrix
from .pauli import num_qubits, skew_coefficients, to_skew

RANK_TOL = 1e-8
ABS_FLOOR = 1e-12


def _check(v, x):
    x = np.asarray(x, dtype=float)
    n = num_qubits(x.shape[-1])
    v = as_local_element(v, n)
    return v, x, n


def omega_at(v, x):
    """Tangent vector ``Omega(v)`` at the point(s) ``x``.

    ``x`` may carry leading batch axes; the last axis has length ``4**n``.
    """
    v, x, n = _check(v, x)
    batch = x.shape[:-1]
    t_in = x.reshape(batch + (4,) * n)
    out = np.zeros_like(t_in)
    nb = len(batch)
    for k in range(n):
        if not np.any(v[k]):
            continue
        ax = nb + k
        block = np.moveaxis(np.take(t_in, [1, 2, 3], axis=ax), ax, -1)
        moved = np.moveaxis(np.cross(v[k], block), -1, ax)
        idx = [slice(None)] * out.ndim
        idx[ax] = slice(1, 4)
        out[tuple(idx)] += moved
    return out.reshape(x.shape)


def omega_at_commutator(v, x):
    """Reference route: coefficients of ``[embed(v), i rho]``."""
    v, x, n = _check(v, x)
    if x.ndim != 1:
        raise ValidationError("commutator route takes a single coefficient vector")
    return skew_coefficients(commutator(embed(v), to_skew(x)))


def basis_element(n, slot, axis):
    """The local element ``xi`` with digit ``axis`` (1..3) in ``slot`` (0-based)."""
    v = np.zeros((n, 3))
    v[slot, axis - 1] = 1.0
    return v


def omega_matrix(v, n):
    """Real ``4^n x 4^n`` matrix ``M`` with ``Omega(v)(x) = M @ x``."""
    v = as_local_element(v, n)
    return omega_at(v, np.eye(4**n)).T


def tangent_frame(x):
    """Rows ``Omega(xi_{k,j})(x)`` ordered slot-major, axes 1, 2, 3 within a slot."""
    x = np.asarray(x, dtype=float)
    n = num_qubits(x.size)
    rows = [
        omega_at(basis_element(n, k, j), x) for k in range(n) for j in (1, 2, 3)
    ]
    return np.array(rows)


def orbit_dimension(x, tol=RANK_TOL):
    """Dimension of the local-unitary orbit through ``x``.

    Numerical rank of :func:`tangent_frame`: singular values above
    ``tol * s_max`` are counted; a frame whose largest singular value is
    below ``ABS_FLOOR`` has rank 0.
    """
    if tol <= 0:
        raise ValidationError("rank tolerance must be positive")
    s = np.linalg.svd(tangent_frame(x), compute_uv=False)
    if s.size == 0 or s[0] <= ABS_FLOOR:
        return 0
    return int(np.sum(s > tol * s[0]))


def local_action(v, x):
    """Coefficients of ``Ad_U(i rho)`` for ``U = local_exp(v)``.

    Computed in coordinates: slot ``k`` acts on its digit by ``1 (+) R_k``
    with ``R_k = exp(a^(k) . L)``.
    """
    v, x, n = _check(v, x)
    batch = x.shape[:-1]
    t = x.reshape(batch + (4,) * n)
    nb = len(batch)
    for k in range(n):
        rot = np.eye(4)
        rot[1:, 1:] = rotation_matrix(v[k])
        t = np.moveaxis(np.tensordot(rot, t, axes=([1], [nb + k])), 0, nb + k)
    return t.reshape(x.shape)


def local_action_matrix_route(v, x):
    """Reference route for :func:`local_action` through ``U rho U^dagger``."""
    v, x, n = _check(v, x)
    u = local_exp(v)
    return skew_coefficients(big_adjoint(u, to_skew(x)))


def transform_density(v, rho):
    """``U rho U^dagger`` for ``U = local_exp(v)``."""
    u = local_exp(v)
    return big_adjoint(u, np.asarray(rho, dtype=complex))


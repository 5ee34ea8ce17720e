"""Closed-form local-unitary invariants for one and two qubits.

Two-qubit notation (coefficients ``x_jk`` of ``i rho``):

* ``x*0 = (x_10, x_20, x_30)`` rotates with the first qubit,
* ``x0* = (x_01, x_02, x_03)`` rotates with the second qubit,
* ``X = (x_jk)_{j,k=1..3}`` rotates as ``R1 X R2^T``,
* ``Z = X X^T`` rotates as ``R1 Z R1^T``.

Every product below contracts indices of the same qubit, which is what
makes it invariant.  The tenth value is a signed volume; it is needed to
tell apart states that are mirror images of each other.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import CapabilityError, ValidationError
from .pauli import num_qubits, reconstruct

EQUAL_TOL = 1e-9

TWO_QUBIT_NAMES = (
    "Tr(Z)",
    "Tr(Z^2)",
    "det(X)",
    "x*0.x*0",
    "x*0.Z.x*0",
    "x*0.Z^2.x*0",
    "x*0.X.x0*",
    "x*0.Z.X.x0*",
    "x*0.Z^2.X.x0*",
    "x*0.(Z x*0 x Z^2 x*0)",
)
TWO_QUBIT_DEGREES = (2, 4, 3, 2, 4, 6, 3, 5, 7, 9)


@dataclass(frozen=True)
class InvariantRecord:
    """Named invariant values of one state.

    ``complete`` is True when equality of every value is sufficient for
    local equivalence (n = 1, 2); for larger n the record is a necessary
    condition only.
    """

    n: int
    names: tuple
    values: tuple
    complete: bool = True

    def as_dict(self):
        return dict(zip(self.names, self.values))

    def __getitem__(self, name):
        return self.values[self.names.index(name)]


class TwoQubitBlocks(NamedTuple):
    x00: float
    x0s: np.ndarray
    xs0: np.ndarray
    xss: np.ndarray
    Z: np.ndarray


def _coeffs(x, n):
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ValidationError("expected a single coefficient vector")
    got = num_qubits(x.size)
    if got != n:
        raise ValidationError(f"expected a {n}-qubit coefficient vector, got n={got}")
    return x


def one_qubit_invariant(x):
    """Bloch radius ``|(x_1, x_2, x_3)|``; complete for a single qubit."""
    x = _coeffs(x, 1)
    return float(np.linalg.norm(x[1:]))


def two_qubit_blocks(x):
    x = _coeffs(x, 2)
    m = x.reshape(4, 4)
    xss = m[1:, 1:].copy()
    return TwoQubitBlocks(
        x00=float(m[0, 0]),
        x0s=m[0, 1:].copy(),
        xs0=m[1:, 0].copy(),
        xss=xss,
        Z=xss @ xss.T,
    )


def two_qubit_values(x):
    """The ten two-qubit invariants as an array, in :data:`TWO_QUBIT_NAMES` order."""
    b = two_qubit_blocks(x)
    s, t, X, Z = b.xs0, b.x0s, b.xss, b.Z
    Z2 = Z @ Z
    Zs = Z @ s
    Z2s = Z2 @ s
    return np.array(
        [
            np.trace(Z),
            np.trace(Z2),
            np.linalg.det(X),
            s @ s,
            s @ Zs,
            s @ Z2s,
            s @ X @ t,
            s @ Z @ X @ t,
            s @ Z2 @ X @ t,
            s @ np.cross(Zs, Z2s),
        ]
    )


def two_qubit_invariants(x):
    values = tuple(float(v) for v in two_qubit_values(x))
    return InvariantRecord(2, TWO_QUBIT_NAMES, values)


def spectral_invariants(x):
    """Trace coordinate and power sums ``Tr(rho^k)``, k = 2..2^n.

    Valid for any n, never complete for n >= 2.
    """
    x = np.asarray(x, dtype=float)
    n = num_qubits(x.size)
    evals = np.linalg.eigvalsh(reconstruct(x))
    names = ["x_" + "0" * n] + [f"Tr(rho^{k})" for k in range(2, 2**n + 1)]
    values = [float(x[0])] + [float(np.sum(evals**k)) for k in range(2, 2**n + 1)]
    return InvariantRecord(n, tuple(names), tuple(values), complete=False)


def invariants(x):
    """Best available invariant record for the qubit count of ``x``."""
    n = num_qubits(np.asarray(x).size)
    if n == 1:
        return InvariantRecord(1, ("radius",), (one_qubit_invariant(x),))
    if n == 2:
        return two_qubit_invariants(x)
    return spectral_invariants(x)


def invariants_equal(a, b, tol=EQUAL_TOL):
    """Compare two complete records.

    Returns ``(True, None)`` when every value agrees within
    ``tol * max(1, |a|, |b|)``, else ``(False, name)`` with the first
    differing invariant.

    Raises
    ------
    CapabilityError
        For records without a closed-form complete set (n >= 3); use
        :func:`entclass.orbit.locally_equivalent` instead.
    """
    if a.n != b.n:
        raise ValidationError(f"records have different qubit counts {a.n}, {b.n}")
    if a.n not in (1, 2) or not (a.complete and b.complete):
        raise CapabilityError(
            f"no complete invariant set for n={a.n}; use orbit search"
        )
    for name, va, vb in zip(a.names, a.values, b.values):
        if abs(va - vb) > tol * max(1.0, abs(va), abs(vb)):
            return False, name
    return True, None

"""Deciding local equivalence of two states.

The search works in coefficient space: a local unitary ``U = local_exp(theta)``
acts on ``x`` by ``1 (+) R_k`` on every slot (:func:`entclass.tangent.local_action`),
and ``||Ad_U(i rho) - i rho'||_F = 2^((n-2)/2) ||U.x - y||``.  The residual
``U.x - y`` is minimised by Levenberg-Marquardt.  Its Jacobian comes from the
infinitesimal action: moving ``theta_k`` along ``b`` rotates slot ``k`` by
``J(theta_k) b``, and ``Omega`` gives the resulting tangent vector.
"""

import warnings
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
import scipy.optimize

from .errors import ValidationError
from .invariants import EQUAL_TOL, invariants, invariants_equal
from .lie import as_local_element, so3_left_jacobian
from .pauli import decompose, num_qubits, reconstruct, validate_density
from .tangent import local_action, tangent_frame

SPECTRAL_TOL = 1e-9


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 32
    max_iterations: int = 500
    step_tol: float = 1e-12
    grad_tol: float = 1e-12
    distance_tol: float = 1e-6
    invariant_tol: float = EQUAL_TOL
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1 or self.max_iterations < 1:
            raise ValidationError("restarts and max_iterations must be >= 1")
        if min(self.step_tol, self.grad_tol, self.distance_tol, self.invariant_tol) <= 0:
            raise ValidationError("tolerances must be positive")


@dataclass(frozen=True)
class EquivalenceVerdict:
    status: str  # "equivalent" | "distinct" | "inconclusive"
    distance: float = float("nan")
    witness: Optional[np.ndarray] = None
    separating_invariant: Optional[str] = None


def _physical_coeffs(x, name):
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ValidationError(f"{name} must be a single coefficient vector")
    n = num_qubits(x.size)
    if not validate_density(reconstruct(x)).physical:
        raise ValidationError(f"{name} is not a physical density operator")
    return x, n


def frobenius_scale(n):
    """``||sum_a x_a xi_a||_F / ||x||`` on ``n`` qubits."""
    return 2.0 ** ((n - 2) / 2)


def _residual(theta, x, y, n):
    return local_action(theta.reshape(n, 3), x) - y


def _jacobian(theta, x, y, n):
    theta = theta.reshape(n, 3)
    frame = tangent_frame(local_action(theta, x))
    jac = np.empty((x.size, 3 * n))
    for k in range(n):
        rows = frame[3 * k : 3 * k + 3]
        jac[:, 3 * k : 3 * k + 3] = rows.T @ so3_left_jacobian(theta[k])
    return jac


def _starts(n, cfg):
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    yield np.zeros(3 * n)
    for child in children[1:]:
        yield np.random.default_rng(child).uniform(-np.pi, np.pi, 3 * n)


def _local_search(theta0, x, y, n, cfg):
    args = (x, y, n)
    try:
        res = scipy.optimize.least_squares(
            _residual,
            theta0,
            jac=_jacobian,
            args=args,
            method="lm",
            xtol=cfg.step_tol,
            ftol=cfg.step_tol,
            gtol=cfg.grad_tol,
            max_nfev=cfg.max_iterations,
        )
        if res.status > 0:
            return res.x
    except (ValueError, np.linalg.LinAlgError):
        pass
    res = scipy.optimize.minimize(
        lambda t: float(np.sum(_residual(t, *args) ** 2)),
        theta0,
        method="Nelder-Mead",
        options={"maxiter": cfg.max_iterations * 3 * n, "xatol": cfg.step_tol},
    )
    return res.x


def orbit_distance(x, y, cfg=None):
    """Smallest found Frobenius distance from the orbit of ``x`` to ``y``.

    Returns ``(distance, witness)`` where ``witness`` is the ``(n, 3)``
    local element of the best unitary.  Restart 0 starts at the identity;
    later restarts start uniformly in ``[-pi, pi]^(3n)`` from seeds derived
    from ``cfg.seed``.  The loop stops early once a restart reaches
    ``cfg.distance_tol``.
    """
    cfg = cfg or SearchConfig()
    x, n = _physical_coeffs(x, "x")
    y, ny = _physical_coeffs(y, "y")
    if n != ny:
        raise ValidationError(f"qubit counts differ: {n} vs {ny}")
    scale = frobenius_scale(n)
    best_d, best_theta = np.inf, np.zeros(3 * n)
    for theta0 in _starts(n, cfg):
        theta = _local_search(theta0, x, y, n, cfg)
        d = scale * float(np.linalg.norm(_residual(theta, x, y, n)))
        if d < best_d:
            best_d, best_theta = d, theta
        if best_d <= cfg.distance_tol:
            break
    return best_d, as_local_element(best_theta, n)


def _spectra_match(x, y, tol):
    ex = np.linalg.eigvalsh(reconstruct(x))
    ey = np.linalg.eigvalsh(reconstruct(y))
    return bool(np.max(np.abs(ex - ey)) <= tol)


def locally_equivalent(x, y, cfg=None):
    """Decide whether ``x`` and ``y`` lie in the same local-unitary orbit.

    Screening order: spectra, then the complete invariant set (n <= 2),
    then orbit search.  For n <= 2 a failed search is retried once with
    four times the restarts before returning ``"inconclusive"`` with a
    warning; for n >= 3 a failed search is inconclusive directly.
    """
    cfg = cfg or SearchConfig()
    x, n = _physical_coeffs(x, "x")
    y, ny = _physical_coeffs(y, "y")
    if n != ny:
        raise ValidationError(f"qubit counts differ: {n} vs {ny}")

    if not _spectra_match(x, y, SPECTRAL_TOL):
        return EquivalenceVerdict("distinct", separating_invariant="spectrum")
    if n <= 2:
        same, name = invariants_equal(invariants(x), invariants(y), cfg.invariant_tol)
        if not same:
            return EquivalenceVerdict("distinct", separating_invariant=name)

    d, witness = orbit_distance(x, y, cfg)
    if d <= cfg.distance_tol:
        return EquivalenceVerdict("equivalent", d, witness)
    if n <= 2:
        wider = replace(cfg, restarts=4 * cfg.restarts, seed=cfg.seed + 1)
        d2, w2 = orbit_distance(x, y, wider)
        if d2 < d:
            d, witness = d2, w2
        if d <= cfg.distance_tol:
            return EquivalenceVerdict("equivalent", d, witness)
        warnings.warn(
            f"invariants agree but orbit search stalled at distance {d:.3g}",
            RuntimeWarning,
            stacklevel=2,
        )
    return EquivalenceVerdict("inconclusive", d, witness)


def random_state(n, purity="mixed", seed=None, terms=None):
    """Random physical state as a coefficient vector.

    ``"pure"`` projects onto a normalised complex Gaussian vector.
    ``"mixed"`` averages ``terms`` such projectors (default ``2**n``) with
    uniform random weights.
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    if purity not in ("pure", "mixed"):
        raise ValidationError(f"purity must be 'pure' or 'mixed', not {purity!r}")
    rng = np.random.default_rng(seed)
    dim = 2**n
    k = 1 if purity == "pure" else (terms or dim)
    psi = rng.standard_normal((k, dim)) + 1j * rng.standard_normal((k, dim))
    psi /= np.linalg.norm(psi, axis=1, keepdims=True)
    w = np.ones(1) if k == 1 else rng.uniform(0.0, 1.0, k)
    w /= w.sum()
    rho = np.einsum("k,ki,kj->ij", w, psi, psi.conj())
    return decompose(0.5 * (rho + rho.conj().T))


def random_local_element(n, rng):
    return rng.uniform(-np.pi, np.pi, size=(n, 3))

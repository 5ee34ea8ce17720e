"""Polynomial invariants as the joint kernel of the infinitesimal action.

A smooth ``f`` on u(2^n) is a local-unitary invariant exactly when
``Omega(xi_{k,j}) f = 0`` for every local basis element.  Each
``Omega(xi_{k,j})`` is a first-order operator ``sum_a (M x)_a d/dx_a`` with
``M`` constant, so it maps homogeneous polynomials of degree ``d`` to
themselves.  Restricted to one degree it is a finite matrix over
monomials, and invariants of that degree are the common null space.

A second grading makes the problem block diagonal: ``M`` only changes a
nonzero digit into another nonzero digit, so the *support pattern* of each
variable (which slots carry a nonzero digit) is preserved.  Monomials are
grouped by the multiset of their variables' patterns and each group is
solved separately.
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse

from .errors import ValidationError, BudgetExceededError
from .lie import as_local_element
from .pauli import index_to_digits, num_qubits
from .tangent import basis_element, local_action, omega_matrix

KERNEL_TOL = 1e-10
SIZE_BUDGET = 20_000


def monomial_count(n, degree):
    return math.comb(4**n + degree - 1, degree)


@dataclass(frozen=True)
class MonomialBasis:
    """Homogeneous monomials of one degree in the ``4**n`` coefficients.

    Each monomial is stored as the sorted tuple of its variable indices
    (with repetition); the list is in lexicographic order of those tuples.
    """

    n: int
    degree: int
    monomials: tuple = field(repr=False)
    lookup: dict = field(repr=False, compare=False)

    @classmethod
    def build(cls, n, degree, budget=SIZE_BUDGET):
        if n < 1 or degree < 0:
            raise ValidationError("need n >= 1 and degree >= 0")
        size = monomial_count(n, degree)
        if budget is not None and size > budget:
            raise BudgetExceededError(size, budget)
        mons = tuple(itertools.combinations_with_replacement(range(4**n), degree))
        return cls(n, degree, mons, {m: i for i, m in enumerate(mons)})

    def __len__(self):
        return len(self.monomials)

    def exponents(self, i):
        e = np.zeros(4**self.n, dtype=int)
        for a in self.monomials[i]:
            e[a] += 1
        return e

    def index_array(self):
        """``(len, degree)`` int array of variable indices per monomial."""
        return np.array(self.monomials, dtype=int).reshape(len(self), self.degree)


@dataclass(frozen=True)
class PolynomialInvariant:
    basis: MonomialBasis
    coeffs: np.ndarray

    @property
    def n(self):
        return self.basis.n

    @property
    def degree(self):
        return self.basis.degree

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        idx = self.basis.index_array()
        mons = np.prod(x[..., idx], axis=-1)
        return mons @ self.coeffs

    def terms(self, cutoff=0.0):
        """``[(variable-index tuple, coeff), ...]`` for nonzero coefficients."""
        return [
            (self.basis.monomials[i], float(c))
            for i, c in enumerate(self.coeffs)
            if abs(c) > cutoff
        ]

    def to_json(self):
        return {
            "n": self.n,
            "degree": self.degree,
            "monomials": [
                {"exponents": self.basis.exponents(i).tolist(), "coeff": float(c)}
                for i, c in enumerate(self.coeffs)
                if c != 0.0
            ],
        }

    @classmethod
    def from_json(cls, data, budget=SIZE_BUDGET):
        basis = MonomialBasis.build(int(data["n"]), int(data["degree"]), budget)
        coeffs = np.zeros(len(basis))
        for term in data["monomials"]:
            exps = term["exponents"]
            if len(exps) != 4**basis.n or sum(exps) != basis.degree:
                raise ValidationError(f"bad exponent vector {exps}")
            key = tuple(a for a, e in enumerate(exps) for _ in range(e))
            coeffs[basis.lookup[key]] += float(term["coeff"])
        return cls(basis, coeffs)

    def pretty(self, digits=6):
        parts = []
        for mon, c in self.terms(cutoff=10.0 ** (-digits)):
            factors = []
            for a, grp in itertools.groupby(mon):
                label = "x" + "".join(map(str, index_to_digits(a, self.n)))
                p = len(list(grp))
                factors.append(label if p == 1 else f"{label}^{p}")
            parts.append(f"{c:+.{digits}g}*" + "*".join(factors or ["1"]))
        return " ".join(parts) or "0"


def _omega_entries(n, slot, axis):
    m = omega_matrix(basis_element(n, slot, axis), n)
    rows, cols = np.nonzero(m)
    return list(zip(rows.tolist(), cols.tolist(), m[rows, cols].tolist()))


def omega_operator(slot, axis, basis):
    """Sparse matrix of ``f -> Omega(xi_{slot,axis}) f`` on ``basis``.

    ``slot`` is 0-based, ``axis`` in 1..3.  Column ``i`` holds the
    expansion of ``Omega`` applied to monomial ``i`` (product rule over its
    factors).
    """
    n = basis.n
    if not 0 <= slot < n or axis not in (1, 2, 3):
        raise ValidationError(f"bad slot/axis ({slot}, {axis}) for n={n}")
    # t_a = sum_b M[a, b] x_b, grouped by a
    images = {}
    for a, b, val in _omega_entries(n, slot, axis):
        images.setdefault(a, []).append((b, val))
    rows, cols, vals = [], [], []
    for col, mon in enumerate(basis.monomials):
        for pos, a in enumerate(mon):
            if pos and mon[pos - 1] == a:
                continue
            mult = mon.count(a)
            rest = list(mon)
            rest.remove(a)
            for b, val in images.get(a, ()):
                key = tuple(sorted(rest + [b]))
                rows.append(basis.lookup[key])
                cols.append(col)
                vals.append(mult * val)
    size = len(basis)
    return scipy.sparse.csr_matrix((vals, (rows, cols)), shape=(size, size))


def all_operators(basis):
    return [
        omega_operator(k, j, basis) for k in range(basis.n) for j in (1, 2, 3)
    ]


def _pattern(a, n):
    return sum(1 << k for k, d in enumerate(index_to_digits(a, n)) if d)


def _blocks(basis):
    pats = [_pattern(a, basis.n) for a in range(4**basis.n)]
    groups = {}
    for i, mon in enumerate(basis.monomials):
        key = tuple(sorted(pats[a] for a in mon))
        groups.setdefault(key, []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def _rref_rows(k):
    """Row-reduce ``k`` (rows spanning a subspace) with partial pivoting."""
    k = k.copy()
    r, c = k.shape
    row = 0
    for col in range(c):
        if row == r:
            break
        piv = row + int(np.argmax(np.abs(k[row:, col])))
        if abs(k[piv, col]) < 1e-9:
            continue
        k[[row, piv]] = k[[piv, row]]
        k[row] /= k[row, col]
        for other in range(r):
            if other != row:
                k[other] -= k[other, col] * k[row]
        row += 1
    k[np.abs(k) < 1e-13] = 0.0
    return k


def invariant_kernel(n, degree, tol=KERNEL_TOL, budget=SIZE_BUDGET):
    """All homogeneous degree-``degree`` polynomial invariants on ``n`` qubits.

    Returns a list of unit-norm :class:`PolynomialInvariant` spanning the
    joint kernel of every ``Omega(xi_{k,j})``.  Singular values at or below
    ``tol * max(1, s_max)`` of each stacked block count as zero.

    Raises
    ------
    BudgetExceededError
        When the monomial space has more than ``budget`` elements.
    """
    if degree < 1:
        raise ValidationError("degree must be >= 1")
    basis = MonomialBasis.build(n, degree, budget)
    ops = [op.tocsc() for op in all_operators(basis)]
    found = []
    for block in _blocks(basis):
        idx = np.array(block)
        stacked = np.vstack([op[idx][:, idx].toarray() for op in ops])
        if not np.any(stacked):
            null = np.eye(len(idx))
        else:
            _, s, vt = np.linalg.svd(stacked, full_matrices=False)
            rank = int(np.sum(s > tol * max(1.0, s[0])))
            null = vt[rank:]
        if null.shape[0] == 0:
            continue
        for vec in _rref_rows(null):
            coeffs = np.zeros(len(basis))
            coeffs[idx] = vec / np.linalg.norm(vec)
            found.append(PolynomialInvariant(basis, coeffs))
    return found


def kernel_residual(p):
    """Largest ``|Omega_{k,j} p|`` entry over all local basis elements."""
    return max(np.max(np.abs(op @ p.coeffs)) for op in all_operators(p.basis))


def multiply(p, q, budget=SIZE_BUDGET):
    """Product polynomial ``p * q`` on the basis of degree ``deg p + deg q``."""
    if p.n != q.n:
        raise ValidationError("polynomials live on different qubit counts")
    basis = MonomialBasis.build(p.n, p.degree + q.degree, budget)
    coeffs = np.zeros(len(basis))
    for mp, cp in p.terms():
        for mq, cq in q.terms():
            coeffs[basis.lookup[tuple(sorted(mp + mq))]] += cp * cq
    return PolynomialInvariant(basis, coeffs)


def monomial_polynomial(n, terms, budget=SIZE_BUDGET):
    """Build a polynomial from ``{variable-index tuple: coeff}``."""
    terms = dict(terms)
    degrees = {len(m) for m in terms}
    if len(degrees) != 1:
        raise ValidationError("terms must share one degree")
    basis = MonomialBasis.build(n, degrees.pop(), budget)
    coeffs = np.zeros(len(basis))
    for mon, c in terms.items():
        coeffs[basis.lookup[tuple(sorted(mon))]] += c
    return PolynomialInvariant(basis, coeffs)


@dataclass(frozen=True)
class VerificationReport:
    trials: int
    max_deviation: float
    tol: float

    @property
    def passed(self):
        return self.max_deviation < self.tol


def verify_invariant(p, trials=1000, tol=1e-10, seed=0):
    """Spot-check invariance under random local unitaries.

    Draws standard-normal coefficient vectors ``x`` and random local
    elements ``v`` with entries in ``[-pi, pi]``; the deviation of a trial is
    ``|p(Ad x) - p(x)| / max(1, |p(x)|)``.
    """
    rng = np.random.default_rng(seed)
    n = p.n
    xs = rng.standard_normal((trials, 4**n))
    vs = rng.uniform(-np.pi, np.pi, size=(trials, n, 3))
    moved = np.array([local_action(as_local_element(v, n), x) for v, x in zip(vs, xs)])
    before = p(xs)
    after = p(moved)
    dev = np.abs(after - before) / np.maximum(1.0, np.abs(before))
    return VerificationReport(trials, float(np.max(dev)), tol)

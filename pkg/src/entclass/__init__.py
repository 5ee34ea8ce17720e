"""Local-unitary classification of multi-qubit states.

States are handled as real coefficient vectors over the Pauli-tensor basis
of u(2^n) (see :mod:`entclass.pauli`).  The main entry points:

* :func:`orbit_dimension` -- dimension of the local-unitary orbit,
* :func:`invariants` -- closed-form invariants for one and two qubits,
* :func:`invariant_kernel` -- polynomial invariants of a given degree,
* :func:`locally_equivalent` -- decide whether two states share an orbit.
"""

from .discovery import (
    MonomialBasis,
    PolynomialInvariant,
    invariant_kernel,
    omega_operator,
    verify_invariant,
)
from .errors import (
    BudgetExceededError,
    CapabilityError,
    EntclassError,
    InvalidIndexError,
    ValidationError,
)
from .invariants import (
    InvariantRecord,
    invariants,
    invariants_equal,
    one_qubit_invariant,
    two_qubit_blocks,
    two_qubit_invariants,
)
from .lie import (
    big_adjoint,
    commutator,
    embed,
    little_adjoint_matrix,
    local_exp,
    matrix_exp,
)
from .orbit import (
    EquivalenceVerdict,
    SearchConfig,
    locally_equivalent,
    orbit_distance,
    random_state,
)
from .pauli import (
    decompose,
    kronecker_sum,
    pauli_tensor,
    reconstruct,
    validate_density,
)
from .tangent import local_action, omega_at, orbit_dimension, tangent_frame

__version__ = "0.1.0"

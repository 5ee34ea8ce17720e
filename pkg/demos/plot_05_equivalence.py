"""
Are two states locally equivalent?
==================================

Invariants rule equivalence out quickly; an explicit local unitary
carrying one state to the other rules it in.  The search minimises the
distance over the local group with restarts.
"""

import numpy as np

from entclass import SearchConfig, decompose, local_action, locally_equivalent, random_state

s = 1 / np.sqrt(2)
phi_plus = s * np.array([1, 0, 0, 1])
psi_minus = s * np.array([0, 1, -1, 0])
a = decompose(np.outer(phi_plus, phi_plus))
b = decompose(np.outer(psi_minus, psi_minus))

v = locally_equivalent(a, b)
print("phi+ vs psi-:", v.status, f"distance {v.distance:.1e}")
print("witness (one row per qubit):")
print(np.round(v.witness, 4))

zz = np.zeros((4, 4))
zz[0, 0] = 1.0
v = locally_equivalent(a, decompose(zz))
print("phi+ vs |00>:", v.status, "separated by", v.separating_invariant)

# plant a random local unitary and recover it
x = random_state(2, "mixed", seed=3)
y = local_action(np.random.default_rng(3).uniform(-np.pi, np.pi, (2, 3)), x)
v = locally_equivalent(x, y, SearchConfig(restarts=8, seed=3))
print("planted pair:", v.status, f"distance {v.distance:.1e}")

# on three qubits no complete invariant set is available
x3 = random_state(3, "pure", seed=1)
y3 = random_state(3, "pure", seed=2)
v = locally_equivalent(x3, y3, SearchConfig(restarts=2))
print("two random 3-qubit pure states:", v.status)

"""
A complete set of two-qubit invariants
======================================

Ten polynomials in the coefficients separate the local orbits of two
qubits.  Here they are evaluated on a few states, and checked against a
random local unitary.
"""

import numpy as np

from entclass import decompose, invariants, local_action, random_state

bell = np.zeros((4, 4))
bell[0, 0] = bell[3, 3] = 0.5
bell[0, 3] = bell[3, 0] = -0.5
zz = np.zeros((4, 4))
zz[0, 0] = 1.0

for label, rho in [("Bell", bell), ("|00><00|", zz)]:
    rec = invariants(decompose(rho))
    print(label)
    for name, val in rec.as_dict().items():
        print(f"   {name:24s} {val: .6f}")

x = random_state(2, "mixed", seed=7)
theta = np.random.default_rng(1).uniform(-np.pi, np.pi, (2, 3))
before = np.array(invariants(x).values)
after = np.array(invariants(local_action(theta, x)).values)
print("max drift under a random local unitary:", np.max(np.abs(after - before)))

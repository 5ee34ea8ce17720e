"""
One qubit and the Bloch ball
============================

A 1-qubit density operator is pinned down by three real numbers.  Local
unitaries rotate them, so the orbits are spheres about the origin and
the radius is the only invariant.
"""

import numpy as np

from entclass import decompose, invariants, local_action, orbit_dimension

# |0><0|, |+><+| and the maximally mixed state
states = {
    "|0><0|": np.diag([1.0, 0.0]),
    "|+><+|": np.full((2, 2), 0.5),
    "I/2": np.eye(2) / 2,
}

for name, rho in states.items():
    x = decompose(rho)
    print(f"{name:8s} x = {np.round(x, 12) + 0.0}  radius = {invariants(x)['radius']:.3f}"
          f"  orbit dim = {orbit_dimension(x)}")

# A random rotation moves the point but keeps it on its sphere.
x = decompose(np.diag([0.8, 0.2]))
y = local_action(np.array([[0.3, -1.2, 2.0]]), x)
print("before", np.round(x[1:], 6) + 0.0, "after", np.round(y[1:], 6) + 0.0)
print("radii", np.linalg.norm(x[1:]), np.linalg.norm(y[1:]))

"""
Orbit dimension of a Bell state
===============================

The local group on two qubits is six dimensional, and a generic state
has a six dimensional orbit.  Maximally entangled states are special:
their stabiliser is large and the orbit drops to dimension three.
"""

import numpy as np

from entclass import decompose, orbit_dimension, random_state, tangent_frame

bell = np.zeros((4, 4))
bell[0, 0] = bell[3, 3] = 0.5
bell[0, 3] = bell[3, 0] = -0.5
x = decompose(bell)

frame = tangent_frame(x)
print("singular values of the tangent frame:")
print(np.round(np.linalg.svd(frame, compute_uv=False), 6))
print("Bell orbit dimension:", orbit_dimension(x))

# generic states, for comparison
dims = [orbit_dimension(random_state(2, "mixed", seed=s)) for s in range(20)]
print("20 random mixed states:", dims)

# product states sit on a 4 dimensional orbit (two Bloch spheres)
zz = np.zeros((4, 4))
zz[0, 0] = 1.0
print("|00><00| orbit dimension:", orbit_dimension(decompose(zz)))

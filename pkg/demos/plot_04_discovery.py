"""
Finding invariants by linear algebra
====================================

A polynomial is invariant exactly when every infinitesimal local
generator annihilates it.  On polynomials of a fixed degree those
generators are plain matrices, so the invariants are a null space.
"""

import time

from entclass import invariant_kernel, verify_invariant

for n, degree in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 2)]:
    t0 = time.perf_counter()
    polys = invariant_kernel(n, degree)
    dt = time.perf_counter() - t0
    print(f"n={n} degree={degree}: {len(polys)} invariants ({dt:.2f}s)")

# The quadratic one-qubit invariants: the trace coordinate squared and the
# squared Bloch radius.
for p in invariant_kernel(1, 2):
    rep = verify_invariant(p, trials=200)
    print("  ", p.pretty(4), " max deviation", f"{rep.max_deviation:.1e}")

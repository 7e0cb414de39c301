"""The lattice of cyclic flats determines the whole q-matroid.

Run with ``python tutorials/02_cyclic_flats.py``.
"""

from __future__ import annotations

from qmat import (
    check_Z_axioms,
    convolution_matroid,
    cyclic_flats,
    f_bounds,
    reconstruct_flats,
    roundtrip_verify,
    span,
)
from qmat.samples import f2, matroid_2x4, matroid_3x5

F2 = f2()

M = matroid_2x4()
L = cyclic_flats(M)
print("cyclic flats:", [(X.label(), r) for X, r in L])
print(L.to_dot())

# Flatness can be decided from the lattice alone, using the two bounds of a space.
B = span([[0, 1, 0, 0], [0, 0, 1, 0]], F2)
vee, wedge = f_bounds(L, B)
print(f"bounds of {B.label()}: {vee.label()} .. {wedge.label()}")
flats = reconstruct_flats(L)
print(len(flats), "flats recovered;", B.label(), "is a flat:", B in flats)

# The convolution rank rebuilds every rank value from (Z, r|Z).
M35 = matroid_3x5()
Z = cyclic_flats(M35)
print("Z axioms:", check_Z_axioms(Z).summary())
MZ = convolution_matroid(5, F2, Z)
print("ranks agree on all subspaces:", MZ.same_ranks(M35))
print("round trip:", roundtrip_verify(M35).to_json())

# The dual matroid's lattice consists of the orthogonal complements.
print("dual lattice:", [(X.label(), r) for X, r in cyclic_flats(M35.dual())])

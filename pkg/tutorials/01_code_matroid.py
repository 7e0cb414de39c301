"""A q-matroid from a rank-metric code, step by step.

Run with ``python tutorials/01_code_matroid.py``.
"""

from __future__ import annotations

from qmat import Subspace, dual_code, new_code, span
from qmat.rmcode import distinct_supports, support
from qmat.samples import f2, f8, generator_3x5

F8, F2 = f8(), f2()
a = F8.alpha  # a^3 = a + 1

# A [5,3] code over F_8 whose coordinates we read over F_2.
C = new_code(generator_3x5(), F8, F2)
print("code:", C.params, "nondegenerate:", C.nondegenerate)

# The rank weight of a word is the dimension of its support, the F_2 column
# space of its coordinate expansion.
S, w = support((a, 1, 0, 0, 0), F8)
print("support of (a, 1, 0, 0, 0):", S.label(), "weight", w)

# Its q-matroid: r(U) = k - dim C(U), where C(U) is the subcode vanishing on U.
M = C.matroid()
print("r(E) =", M.rank(M.E), " nullity(E) =", M.nullity(M.E))
for kind in ("independents", "circuits", "flats", "cyclic_spaces"):
    print(f"{kind:>14}: {len(M.family(kind))}")

# Every subspace gets a full classification.
A1 = span([[1, 0, 0, 1, 1], [0, 1, 0, 1, 0]], F2)
print(A1.label(), M.classify(A1).as_dict())
print("cl(0) =", M.closure(Subspace.zero(F2, 5)).label(), " cyc(E) =", M.cyc(M.E).label())

# The circuits of M are exactly the supports of the dual code.
D = dual_code(C)
circuits = M.family("circuits").members
print("dual code", D.params, "supports = circuits:", sorted(distinct_supports(D).supports()) == sorted(circuits))

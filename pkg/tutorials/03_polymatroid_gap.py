"""Where the rank-gap identity breaks for (q, r)-polymatroids.

For a q-matroid, r(A) - r(cyc A) = dim A - dim cyc A for every A.  The
polymatroid of a 3x3 matrix code over F_3 violates the scaled analogue.

Run with ``python tutorials/03_polymatroid_gap.py``.
"""

from __future__ import annotations

from qmat import from_matrix_code, gap_scan, poly_cyc
from qmat.qpoly import from_qmatroid
from qmat.samples import matrix_code_3x3, matroid_3x5

P = from_matrix_code(matrix_code_3x3())
print(P, "rho(E) =", P.rank(P.lattice[P.lattice.top]))
print("rho axioms:", P.check_axioms().summary())

for g in gap_scan(P):
    print(f"{g.space.label():>12}: rho = {P.rank(g.space)}, cyc = {poly_cyc(P, g.space).label()}, "
          f"lhs {g.lhs} vs rhs {g.rhs}")

# A q-matroid seen as a (q,1)-polymatroid has no gaps at all.
print("gaps of a q-matroid:", gap_scan(from_qmatroid(matroid_3x5())))

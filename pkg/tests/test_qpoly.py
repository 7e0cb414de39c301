from __future__ import annotations

from collections import Counter
from itertools import product

import pytest

from qmat import field, from_matrix_code, gap_scan, poly_cyc, span
from qmat.errors import DependentBasis, InvalidRange
from qmat.qpoly import QPolymatroid, from_qmatroid
from qmat.samples import matrix_code_3x3, matroid_2x4, matroid_3x5

F3 = field(3)
LISTED = ([1, 1, 2], [0, 0, 1], [1, 0, 1], [0, 1, 0])


def rho_by_counting(mats, rows, p=3):
    """log_p of the number of distinct matrices rows . (sum lam_i M_i)."""
    seen = set()
    for lam in product(range(p), repeat=len(mats)):
        S = [[sum(l * M[i][j] for l, M in zip(lam, mats)) % p for j in range(3)] for i in range(3)]
        seen.add(tuple(tuple(sum(r[i] * S[i][j] for i in range(3)) % p for j in range(3)) for r in rows))
    k, size = 0, 1
    while size < len(seen):
        size *= p
        k += 1
    return k


def test_rank_function_matches_counting():
    mats = matrix_code_3x3()
    P = from_matrix_code(mats)
    for A in P.lattice.subspaces:
        assert P.rank(A) == rho_by_counting(mats, A.rows)


def test_published_values():
    P = from_matrix_code(matrix_code_3x3())
    assert P.r_scale == 3 and len(P.lattice) == 28
    assert P.check_axioms().passed
    assert P.rank(P.lattice[P.lattice.top]) == 4
    gaps = {g.space: (g.lhs, g.rhs) for g in gap_scan(P)}
    for v in LISTED:
        c = span([v], F3)
        assert P.rank(c) == 2
        assert poly_cyc(P, c).dim == 0
        assert gaps[c] == (2, 3)


def test_line_ranks_and_gap_set():
    # derived by counting: 9 lines of rank 3, the 4 listed lines of rank 2, and
    # those four are exactly the spaces where the rank-gap identity breaks
    P = from_matrix_code(matrix_code_3x3())
    lat = P.lattice
    assert Counter(P.rank(lat[i]) for i in lat.lines) == {3: 9, 2: 4}
    assert sorted(g.space for g in gap_scan(P)) == sorted(span([v], F3) for v in LISTED)


def test_q_matroids_have_no_gaps():
    for M in (matroid_2x4(), matroid_3x5()):
        P = from_qmatroid(M)
        assert gap_scan(P) == []
        assert all(poly_cyc(P, A) == M.cyc(A) for A in M.lattice.subspaces)


def test_construction_errors():
    mats = matrix_code_3x3()
    with pytest.raises(DependentBasis):
        from_matrix_code([mats[0], mats[0]])
    with pytest.raises(DependentBasis):
        from_matrix_code([])
    with pytest.raises(InvalidRange):
        from_matrix_code([mats[0], [[1, 0], [0, 1]]])
    with pytest.raises(InvalidRange):
        QPolymatroid(2, F3, 0, lambda A: 0)

"""(q,r)-polymatroids from F_q-linear matrix codes, their cyclic operator, and
the scan for subspaces where the q-matroid rank-gap identity fails.

For a code C spanned by a x b matrices, rho(A) = dim C - dim C(A), where C(A)
holds the members whose column span lies in A^perp.  A member sum lam_i M_i is
in C(A) exactly when A_basis . (sum lam_i M_i) = 0, so rho(A) is the rank of the
linear map lam -> A_basis . sum lam_i M_i.  Each row of A contributes at most b
independent entries, hence the bound rho(A) <= b dim A and r_scale = b.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import AmbientMismatch, AxiomViolation, DependentBasis, InvalidRange
from .gf import FiniteField, field
from .linalg import matmul, rank as mat_rank
from .qmatroid import QMatroid
from .subspace import MAX_SUBSPACES, Subspace, SubspaceLattice, lattice


class QPolymatroid:
    """``(F_q^n, rho)`` with 0 <= rho(A) <= r_scale * dim A."""

    def __init__(self, n: int, F: FiniteField, r_scale: int, oracle: Callable[[Subspace], int],
                 name: str = "", max_count: int = MAX_SUBSPACES):
        if r_scale < 1:
            raise InvalidRange(f"r_scale must be positive, got {r_scale}")
        self.n = n
        self.field = F
        self.r_scale = r_scale
        self._oracle = oracle
        self.name = name
        self.max_count = max_count
        self._memo: dict[Subspace, int] = {}
        self._ranks: np.ndarray | None = None

    def __repr__(self):
        return f"<{self.name or 'QPolymatroid'} (q,{self.r_scale}) on {self.field}^{self.n}>"

    def _check(self, A: Subspace) -> None:
        if A.n != self.n or A.field != self.field:
            raise AmbientMismatch(f"{A!r} is not a subspace of {self.field}^{self.n}")

    def rank(self, A: Subspace) -> int:
        self._check(A)
        r = self._memo.get(A)
        if r is None:
            r = self._memo[A] = int(self._oracle(A))
        return r

    @property
    def lattice(self) -> SubspaceLattice:
        return lattice(self.n, self.field, self.max_count)

    @property
    def ranks(self) -> np.ndarray:
        if self._ranks is None:
            self._ranks = np.array([self.rank(s) for s in self.lattice.subspaces], dtype=np.int64)
        return self._ranks

    def check_axioms(self):
        from .crypto import check_rank_function

        return check_rank_function(self.lattice, self.ranks, self.r_scale, "rho", ("rho1", "rho2", "rho3"))

    def cyc(self, A: Subspace) -> Subspace:
        return poly_cyc(self, A)


def _flatten(M: Sequence[Sequence[int]]) -> list[int]:
    return [x for row in M for x in row]


def from_matrix_code(basis_matrices: Sequence[Sequence[Sequence[int]]], p: int = 3,
                     validate: bool = True) -> QPolymatroid:
    """Polymatroid of the F_p-span of ``basis_matrices`` (all a x b) on F_p^a."""
    F = field(p)
    mats = [[[int(x) % p for x in row] for row in M] for M in basis_matrices]
    if not mats:
        raise DependentBasis("need at least one matrix")
    a, b = len(mats[0]), len(mats[0][0])
    if any(len(M) != a or any(len(r) != b for r in M) for M in mats):
        raise InvalidRange("matrices must share one shape")
    if mat_rank([_flatten(M) for M in mats], F) != len(mats):
        raise DependentBasis("basis matrices are linearly dependent")

    def rho(A: Subspace) -> int:
        if not A.rows:
            return 0
        # column i of the map: the entries of A_basis . M_i
        images = [_flatten(matmul([list(r) for r in A.rows], M, F)) for M in mats]
        return mat_rank(images, F)

    P = QPolymatroid(a, F, b, rho, name=f"matrix code ({len(mats)} x {a}x{b})")
    P.matrices = mats
    if validate:
        rep = P.check_axioms()
        if not rep.passed:
            raise AxiomViolation(f"not a (q,{b})-polymatroid: {rep.summary()}", rep)
    return P


def from_qmatroid(M: QMatroid) -> QPolymatroid:
    """A q-matroid viewed as a (q,1)-polymatroid."""
    return QPolymatroid(M.n, M.field, 1, M.rank, name=f"{M.name or 'q-matroid'} as (q,1)", max_count=M.max_count)


def cyc_lines(P: QPolymatroid, A: Subspace) -> list[int]:
    """Lattice line positions x <= A with rho(B+x) - rho(B) < rho(x) for every
    hyperplane B of A; loops always count.

    A hyperplane B containing x makes the left side 0, so read literally the
    test would reject every loop; loops are therefore added unconditionally.
    """
    P._check(A)
    lat, r = P.lattice, P.ranks
    a = lat.id(A)
    out = []
    for x in lat.line_list[a]:
        rx = r[lat.lines[x]]
        if rx == 0 or all(r[lat.join_line[B, x]] - r[B] < rx for B in lat.hyperplanes[a]):
            out.append(x)
    return out


def poly_cyc(P: QPolymatroid, A: Subspace) -> Subspace:
    lat = P.lattice
    acc = lat.bottom
    for x in cyc_lines(P, A):
        acc = int(lat.join_line[acc, x])
    return lat[acc]


@dataclass(frozen=True)
class Gap:
    space: Subspace
    lhs: int
    rhs: int

    def to_json(self) -> dict:
        return {"space": self.space.label(), "lhs": self.lhs, "rhs": self.rhs}


def gap_scan(P: QPolymatroid) -> list[Gap]:
    """Every A with rho(A) - rho(cyc A) != r_scale * (dim A - dim cyc A)."""
    out = []
    for A in P.lattice.subspaces:
        C = poly_cyc(P, A)
        lhs = P.rank(A) - P.rank(C)
        rhs = P.r_scale * (A.dim - C.dim)
        if lhs != rhs:
            out.append(Gap(A, lhs, rhs))
    return out

"""Gaussian elimination over a :class:`~qmat.gf.FiniteField` (int-encoded entries)."""

from __future__ import annotations

from typing import Sequence

from .gf import FiniteField

Matrix = list[list[int]]


def _pack(row: Sequence[int]) -> int:
    # column j -> bit (ncols-1-j) so that int order follows lexicographic row order
    v = 0
    for x in row:
        v = (v << 1) | (x & 1)
    return v


def _unpack(v: int, ncols: int) -> list[int]:
    return [(v >> (ncols - 1 - j)) & 1 for j in range(ncols)]


def _rref_gf2(rows: Sequence[Sequence[int]], ncols: int) -> tuple[Matrix, list[int]]:
    work = [_pack(r) for r in rows]
    work = [w for w in work if w]
    out: list[int] = []
    pivots: list[int] = []
    for col in range(ncols):
        bit = 1 << (ncols - 1 - col)
        idx = next((i for i, w in enumerate(work) if w & bit), None)
        if idx is None:
            continue
        piv = work.pop(idx)
        work = [w ^ piv if w & bit else w for w in work]
        out = [o ^ piv if o & bit else o for o in out]
        out.append(piv)
        pivots.append(col)
        work = [w for w in work if w]
        if not work:
            break
    return [_unpack(o, ncols) for o in out], pivots


def rref(rows: Sequence[Sequence[int]], F: FiniteField, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with zero rows dropped; returns ``(rows, pivot_columns)``."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if F.q == 2:
        return _rref_gf2(rows, ncols)
    A = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(A):
            break
        piv = next((i for i in range(r, len(A)) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][col])
        if inv != 1:
            A[r] = [F.mul(inv, x) for x in A[r]]
        prow = A[r]
        for i in range(len(A)):
            if i != r and A[i][col]:
                c = F.neg(A[i][col])
                A[i] = [F.add(x, F.mul(c, y)) if y else x for x, y in zip(A[i], prow)]
        pivots.append(col)
        r += 1
    return A[:r], pivots


def rank(rows: Sequence[Sequence[int]], F: FiniteField) -> int:
    if not rows:
        return 0
    return len(rref(rows, F)[1])


def nullspace(rows: Sequence[Sequence[int]], F: FiniteField, ncols: int) -> Matrix:
    """Basis of ``{x : A x = 0}`` (right kernel) in the standard free-variable form."""
    R, pivots = rref(rows, F, ncols) if rows else ([], [])
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, pc in zip(R, pivots):
            if row[f]:
                x[pc] = F.neg(row[f])
        basis.append(x)
    return basis


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], F: FiniteField) -> Matrix:
    cols = list(zip(*B)) if B else []
    out = []
    for row in A:
        out_row = []
        for col in cols:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = F.add(acc, F.mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(c) for c in zip(*A)]


def solve_prime_field(B: Sequence[Sequence[int]], targets: Sequence[Sequence[int]], p: int):
    """Solve ``B x = t`` over F_p for each target ``t`` (B square).

    Returns the list of solution vectors, or ``None`` when ``B`` is singular.
    """
    m = len(B)
    A = [[B[i][j] % p for j in range(m)] + [t[i] % p for t in targets] for i in range(m)]
    width = len(A[0]) if A else 0
    for col in range(m):
        piv = next((i for i in range(col, m) if A[i][col]), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        inv = pow(A[col][col], p - 2, p)
        A[col] = [(x * inv) % p for x in A[col]]
        for i in range(m):
            if i != col and A[i][col]:
                c = A[i][col]
                A[i] = [(x - c * y) % p for x, y in zip(A[i], A[col])]
    return [[A[i][m + t] for i in range(m)] for t in range(width - m)]

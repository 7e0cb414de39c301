"""Small worked examples used by the tests, the tutorials and ``qmat repro``.

The vector-code samples live over F_8 = F_2[a]/(a^3 + a + 1) with F_2 as the
base field.  The matrix-code sample is a 4-dimensional space of 3x3 matrices
over F_3.
"""

from __future__ import annotations

from .gf import FiniteField, field
from .qmatroid import QMatroid, from_code_matrix


def f8() -> FiniteField:
    return field(2, 3)


def f2() -> FiniteField:
    return field(2)


def _a(k: int) -> int:
    F = f8()
    return F.pow(F.alpha, k)


def generator_2x5() -> list[list[int]]:
    """A 2x5 generator matrix over F_8 (102 cyclic spaces)."""
    a = _a
    return [[1, a(1), 1, a(2), a(4)], [a(3), a(4), a(4), 1, 1]]


def generator_2x4() -> list[list[int]]:
    """A 2x4 generator matrix over F_8 whose only nonzero cyclic flat is <e2, e3, e4>."""
    a = _a
    return [[1, 0, 0, 0], [0, 1, a(1), a(2)]]


def generator_3x5() -> list[list[int]]:
    """A 3x5 generator matrix over F_8 with five cyclic flats."""
    a = _a
    return [[1, a(1), 1, 0, a(2)], [0, 1, a(5), a(2), a(1)], [0, 0, 1, a(4), a(1)]]


def matroid_2x5() -> QMatroid:
    M = from_code_matrix(generator_2x5(), f8(), f2())
    M.name = "M(2x5)"
    return M


def matroid_2x4() -> QMatroid:
    M = from_code_matrix(generator_2x4(), f8(), f2())
    M.name = "M(2x4)"
    return M


def matroid_3x5() -> QMatroid:
    M = from_code_matrix(generator_3x5(), f8(), f2())
    M.name = "M(3x5)"
    return M


def matrix_code_3x3() -> list[list[list[int]]]:
    """Basis M1..M4 of a 4-dimensional F_3-space of 3x3 matrices."""
    return [
        [[1, 2, 1], [1, 2, 2], [1, 1, 1]],
        [[0, 2, 1], [2, 1, 1], [0, 1, 2]],
        [[2, 2, 0], [1, 1, 1], [0, 1, 2]],
        [[0, 2, 2], [0, 0, 0], [2, 0, 1]],
    ]


SAMPLES = {
    "2x5": matroid_2x5,
    "2x4": matroid_2x4,
    "3x5": matroid_3x5,
}

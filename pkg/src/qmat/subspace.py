"""Subspaces of F_q^n in canonical RREF form, and exhaustive enumeration.

:class:`Subspace` is the value type used everywhere; equality and hashing go
through the reduced row echelon form, which is unique.  :class:`SubspaceLattice`
indexes every subspace of one ambient space and precomputes the incidence data
(lines, hyperplanes, covers, joins with a line, orthogonal complements) that
the matroid algorithms iterate over.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import AmbientMismatch, EnumerationTooLarge, FieldMismatch, InvalidRange
from .gf import FiniteField
from .linalg import nullspace, rref

MAX_SUBSPACES = 10**7
MAX_PAIR_TABLE = 6000


class Subspace:
    """An F_q-subspace of F_q^n, stored as its RREF basis (zero rows absent).

    Build instances with :func:`span` (or :meth:`Subspace.from_rows`); the plain
    constructor trusts that ``rows`` is already canonical.
    """

    __slots__ = ("field", "n", "rows", "_hash")

    def __init__(self, field: FiniteField, n: int, rows: Sequence[Sequence[int]]):
        self.field = field
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self._hash = hash((self.n, self.rows))

    @classmethod
    def from_rows(cls, field: FiniteField, n: int, rows: Iterable[Sequence[int]]) -> "Subspace":
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise AmbientMismatch(f"vector of length {len(r)} in F_q^{n}")
        R, _ = rref(rows, field, n) if rows else ([], [])
        return cls(field, n, R)

    @classmethod
    def zero(cls, field: FiniteField, n: int) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def full(cls, field: FiniteField, n: int) -> "Subspace":
        return cls(field, n, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def key(self) -> tuple:
        return (len(self.rows), tuple(x for r in self.rows for x in r))

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x) for r in self.rows]

    def encode(self) -> bytes:
        """Canonical byte string: dimension, then the RREF entries row-major."""
        width = 1 if self.field.q <= 256 else 2
        out = bytearray([self.dim])
        for r in self.rows:
            for x in r:
                out += x.to_bytes(width, "big")
        return bytes(out)

    def _check(self, other: "Subspace") -> None:
        if self.n != other.n:
            raise AmbientMismatch(f"F_q^{self.n} vs F_q^{other.n}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows and self.field == other.field

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Subspace") -> bool:
        return self.key < other.key

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __contains__(self, item) -> bool:
        if isinstance(item, Subspace):
            return contains(self, item)
        return contains(self, Subspace.from_rows(self.field, self.n, [item]))

    def __le__(self, other: "Subspace") -> bool:
        return contains(other, self)

    def ortho(self) -> "Subspace":
        return ortho(self)

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """All q^dim vectors, in coefficient-lexicographic order."""
        F = self.field
        for coeffs in product(range(F.q), repeat=self.dim):
            yield _combine(coeffs, self.rows, F, self.n)

    def line_vectors(self) -> Iterator[tuple[int, ...]]:
        """One normalized vector (first nonzero entry 1) per line of the subspace."""
        F = self.field
        for coeffs in normalized_vectors(self.dim, F.q):
            yield _combine(coeffs, self.rows, F, self.n)

    def label(self) -> str:
        """Generators in e_i notation, e.g. ``<e2+e5, e3+e5>``."""
        if not self.rows:
            return "<0>"
        return "<" + ", ".join(vector_label(r, self.field) for r in self.rows) + ">"

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    def __repr__(self):
        return f"Subspace({self.label()} in {self.field}^{self.n})"


def vector_label(v: Sequence[int], F: FiniteField) -> str:
    terms = []
    for i, c in enumerate(v):
        if not c:
            continue
        coef = "" if c == 1 else (F.format(c) if F.e == 1 else f"({F.format(c)})")
        terms.append(f"{coef}e{i + 1}")
    return "+".join(terms) or "0"


def subspace_from_json(obj: dict, F: FiniteField) -> Subspace:
    """Canonicalizing inverse of :meth:`Subspace.to_json`."""
    n = int(obj["n"])
    return Subspace.from_rows(F, n, obj.get("rows", []))


def _combine(coeffs, rows, F: FiniteField, n: int) -> tuple[int, ...]:
    v = [0] * n
    for c, r in zip(coeffs, rows):
        if not c:
            continue
        for j, x in enumerate(r):
            if x:
                v[j] = F.add(v[j], F.mul(c, x))
    return tuple(v)


@lru_cache(maxsize=None)
def normalized_vectors(k: int, q: int) -> tuple[tuple[int, ...], ...]:
    """Nonzero vectors of F_q^k whose first nonzero entry is 1, lexicographically."""
    out = []
    for lead in range(k):
        for tail in product(range(q), repeat=k - lead - 1):
            out.append((0,) * lead + (1,) + tail)
    return tuple(sorted(out))


# -- basic operations -------------------------------------------------------------
def span(vectors: Sequence[Sequence[int]], F: FiniteField, n: int | None = None) -> Subspace:
    """Canonical span of ``vectors``; ``n`` is required when the list is empty."""
    if n is None:
        if not vectors:
            raise AmbientMismatch("ambient dimension needed for an empty span")
        n = len(vectors[0])
    return Subspace.from_rows(F, n, vectors)


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    A._check(B)
    if not B.rows:
        return A
    if not A.rows:
        return B
    return Subspace.from_rows(A.field, A.n, list(A.rows) + list(B.rows))


def ortho(A: Subspace) -> Subspace:
    """Orthogonal complement under the standard dot product."""
    return Subspace.from_rows(A.field, A.n, nullspace(A.rows, A.field, A.n))


def intersect(A: Subspace, B: Subspace) -> Subspace:
    A._check(B)
    return ortho(subspace_sum(ortho(A), ortho(B)))


def contains(A: Subspace, B: Subspace) -> bool:
    """True iff ``B <= A``."""
    A._check(B)
    if B.dim > A.dim:
        return False
    return subspace_sum(A, B).dim == A.dim


def in_coordinates(A: Subspace, sub_rows: Sequence[Sequence[int]]) -> Subspace:
    """Map coordinate vectors w.r.t. the RREF basis of ``A`` into the ambient space."""
    F = A.field
    return Subspace.from_rows(F, A.n, [_combine(c, A.rows, F, A.n) for c in sub_rows])


# -- counting and enumeration -------------------------------------------------------
def count_subspaces(n: int, k: int, q: int) -> int:
    """Gaussian binomial coefficient [n choose k]_q."""
    if not 0 <= k <= n:
        raise InvalidRange(f"need 0 <= k <= n, got k={k}, n={n}")
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def total_subspaces(n: int, q: int) -> int:
    return sum(count_subspaces(n, k, q) for k in range(n + 1))


def _rref_rows_of_dim(n: int, k: int, F: FiniteField) -> Iterator[list[list[int]]]:
    q = F.q
    for pivots in combinations(range(n), k):
        pivset = set(pivots)
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivset]
        for vals in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), x in zip(free, vals):
                rows[i][j] = x
            yield rows


def _all_of_dim(n: int, k: int, F: FiniteField) -> list[Subspace]:
    subs = [Subspace(F, n, rows) for rows in _rref_rows_of_dim(n, k, F)]
    subs.sort(key=lambda s: s.key)
    return subs


def enumerate_subspaces(
    n: int,
    F: FiniteField,
    mode: str = "all",
    A: Subspace | None = None,
    d: int | None = None,
    max_count: int = MAX_SUBSPACES,
) -> Iterator[Subspace]:
    """Yield subspaces in canonical order.

    ``mode`` is one of ``all``, ``fixed_dim`` (needs ``d``), ``one_dims_of``,
    ``hyperplanes_of``, ``superspaces_of`` (the last three need ``A``).
    """
    q = F.q
    if mode == "all":
        total = total_subspaces(n, q)
        if total > max_count:
            raise EnumerationTooLarge(f"{total} subspaces of F_{q}^{n} exceed the limit {max_count}")
        for k in range(n + 1):
            yield from _all_of_dim(n, k, F)
        return
    if mode == "fixed_dim":
        if d is None or not 0 <= d <= n:
            raise InvalidRange(f"fixed_dim needs 0 <= d <= {n}")
        total = count_subspaces(n, d, q)
        if total > max_count:
            raise EnumerationTooLarge(f"{total} subspaces exceed the limit {max_count}")
        yield from _all_of_dim(n, d, F)
        return
    if A is None:
        raise InvalidRange(f"mode {mode!r} needs a subspace A")
    if A.n != n or A.field != F:
        raise AmbientMismatch("A does not live in the requested ambient space")
    if mode in ("one_dims_of", "hyperplanes_of"):
        k = A.dim
        if mode == "one_dims_of":
            if k == 0:
                return
            sub_rows = [[c] for c in normalized_vectors(k, q)]
        else:
            if k == 0:
                return
            sub_rows = [s.rows for s in _all_of_dim(k, k - 1, F)]
        out = sorted((in_coordinates(A, rows) for rows in sub_rows), key=lambda s: s.key)
        yield from out
        return
    if mode == "superspaces_of":
        perp = ortho(A)
        total = total_subspaces(perp.dim, q)
        if total > max_count:
            raise EnumerationTooLarge(f"{total} superspaces exceed the limit {max_count}")
        subs = []
        for k in range(perp.dim + 1):
            for rows in _rref_rows_of_dim(perp.dim, k, F):
                subs.append(ortho(in_coordinates(perp, rows)))
        subs.sort(key=lambda s: s.key)
        yield from subs
        return
    raise InvalidRange(f"unknown enumeration mode {mode!r}")


# -- the indexed lattice ----------------------------------------------------------------
class SubspaceLattice:
    """Every subspace of F_q^n with integer ids and precomputed incidences.

    Ids follow the canonical order (dimension, then RREF entries).  Lines are
    addressed by their position in :attr:`lines`; ``line_mask[i]`` is the set of
    line positions inside subspace ``i`` as an int bitmask, which makes
    containment and intersection bit operations.
    """

    def __init__(self, n: int, F: FiniteField, max_count: int = MAX_SUBSPACES):
        total = total_subspaces(n, F.q)
        if total > max_count:
            raise EnumerationTooLarge(f"{total} subspaces of F_{F.q}^{n} exceed the limit {max_count}")
        self.n = n
        self.field = F
        q = F.q
        subs: list[Subspace] = []
        for k in range(n + 1):
            subs.extend(_all_of_dim(n, k, F))
        self.subspaces = subs
        self.N = len(subs)
        self.index = {s: i for i, s in enumerate(subs)}
        self.dims = np.array([s.dim for s in subs], dtype=np.int64)
        self.bottom = 0
        self.top = self.N - 1

        line_ids = [i for i, s in enumerate(subs) if s.dim == 1]
        self.lines = line_ids
        self.L = len(line_ids)
        self.vec_to_line = {subs[i].rows[0]: pos for pos, i in enumerate(line_ids)}

        # line positions of each subspace, listed in normalized-coordinate order
        self.line_list: list[list[int]] = []
        self.line_mask: list[int] = []
        for s in subs:
            pos = [self.vec_to_line[v] for v in s.line_vectors()]
            self.line_list.append(pos)
            m = 0
            for x in pos:
                m |= 1 << x
            self.line_mask.append(m)
        self.mask_to_id = {m: i for i, m in enumerate(self.line_mask)}

        # hyperplanes: kernels of nonzero functionals on coordinate space
        self.hyperplanes: list[list[int]] = [[] for _ in subs]
        self.covers: list[list[int]] = [[] for _ in subs]
        for b, s in enumerate(subs):
            k = s.dim
            if k == 0:
                continue
            coords = normalized_vectors(k, q)
            inc = _kernel_incidence(k, F)
            pos = self.line_list[b]
            for f_idx in range(len(coords)):
                m = 0
                for i in inc[f_idx]:
                    m |= 1 << pos[i]
                h = self.mask_to_id[m]
                self.hyperplanes[b].append(h)
                self.covers[h].append(b)
        for lst in self.hyperplanes:
            lst.sort()
        for lst in self.covers:
            lst.sort()

        jl = np.empty((self.N, self.L), dtype=np.int32)
        for a in range(self.N):
            ma = self.line_mask[a]
            for x in self.line_list[a]:
                jl[a, x] = a
            for c in self.covers[a]:
                for x in self.line_list[c]:
                    if not (ma >> x) & 1:
                        jl[a, x] = c
        self.join_line = jl

        # the first row of each RREF gives a line; basis lines suffice to build sums
        self.basis_lines = [[self.vec_to_line[_normalize(r, F)] for r in s.rows] for s in subs]
        self.ortho = np.array([self.index[ortho(s)] for s in subs], dtype=np.int64)
        self._sum_table = None
        self._meet_table = None
        self._incidence = None

    # -- lookups ---------------------------------------------------------------------
    def id(self, A: Subspace) -> int:
        if A.n != self.n or A.field != self.field:
            raise AmbientMismatch(f"{A!r} is not in {self.field}^{self.n}")
        return self.index[A]

    def __getitem__(self, i: int) -> Subspace:
        return self.subspaces[i]

    def __len__(self) -> int:
        return self.N

    def line_of_vector(self, v: Sequence[int]) -> int:
        return self.vec_to_line[_normalize(v, self.field)]

    def sum_ids(self, a: int, b: int) -> int:
        if self._sum_table is not None:
            return int(self._sum_table[a, b])
        jl = self.join_line
        for x in self.basis_lines[b]:
            a = int(jl[a, x])
        return a

    def sum_lines(self, a: int, line_positions: Iterable[int]) -> int:
        jl = self.join_line
        for x in line_positions:
            a = int(jl[a, x])
        return a

    def meet_ids(self, a: int, b: int) -> int:
        return self.mask_to_id[self.line_mask[a] & self.line_mask[b]]

    def leq(self, a: int, b: int) -> bool:
        """``subspace a <= subspace b``."""
        ma = self.line_mask[a]
        return self.dims[a] <= self.dims[b] and (ma & self.line_mask[b]) == ma

    def lines_of(self, a: int) -> list[int]:
        return self.line_list[a]

    def subspaces_below(self, a: int) -> list[int]:
        ma = self.line_mask[a]
        return [i for i, m in enumerate(self.line_mask) if (m & ma) == m]

    @property
    def line_incidence(self) -> np.ndarray:
        """Boolean ``N x L`` matrix: subspace i contains line x."""
        if self._incidence is None:
            inc = np.zeros((self.N, self.L), dtype=bool)
            for i, pos in enumerate(self.line_list):
                inc[i, pos] = True
            self._incidence = inc
        return self._incidence

    # -- dense pair tables (for exhaustive pairwise checks) -------------------------------
    def _require_pairs(self) -> None:
        if self.N > MAX_PAIR_TABLE:
            raise EnumerationTooLarge(f"pair tables for {self.N} subspaces exceed {MAX_PAIR_TABLE}^2")

    @property
    def sum_table(self) -> np.ndarray:
        if self._sum_table is None:
            self._require_pairs()
            table = np.empty((self.N, self.N), dtype=np.int32)
            base = np.arange(self.N, dtype=np.int32)
            jl = self.join_line
            for b in range(self.N):
                col = base
                for x in self.basis_lines[b]:
                    col = jl[col, x]
                table[:, b] = col
            self._sum_table = table
        return self._sum_table

    @property
    def meet_table(self) -> np.ndarray:
        if self._meet_table is None:
            o = self.ortho
            self._meet_table = o[self.sum_table[np.ix_(o, o)]].astype(np.int32)
        return self._meet_table

    def leq_matrix(self) -> np.ndarray:
        """Boolean matrix ``M[a, b] = (a <= b)``."""
        return self.meet_table == np.arange(self.N)[:, None]


def _normalize(v: Sequence[int], F: FiniteField) -> tuple[int, ...]:
    lead = next(x for x in v if x)
    if lead == 1:
        return tuple(v)
    inv = F.inv(lead)
    return tuple(F.mul(inv, x) for x in v)


@lru_cache(maxsize=None)
def _kernel_incidence(k: int, F: FiniteField) -> list[list[int]]:
    """For each normalized functional f on F_q^k, the normalized c with f.c = 0."""
    coords = normalized_vectors(k, F.q)
    out = []
    for f in coords:
        row = []
        for i, c in enumerate(coords):
            acc = 0
            for a, b in zip(f, c):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            if acc == 0:
                row.append(i)
        out.append(row)
    return out


@lru_cache(maxsize=16)
def _cached_lattice(n: int, F: FiniteField) -> SubspaceLattice:
    return SubspaceLattice(n, F, max_count=MAX_SUBSPACES)


def lattice(n: int, F: FiniteField, max_count: int = MAX_SUBSPACES) -> SubspaceLattice:
    """Shared, memoized :class:`SubspaceLattice` for ``F^n``."""
    total = total_subspaces(n, F.q)
    if total > max_count:
        raise EnumerationTooLarge(f"{total} subspaces of F_{F.q}^{n} exceed the limit {max_count}")
    return _cached_lattice(n, F)


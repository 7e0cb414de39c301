"""q-matroids given by a rank oracle, with closure/cyclic operators and families.

A :class:`QMatroid` wraps an integer rank function on the subspaces of F_q^n.
Single queries go through a memo keyed by the canonical subspace.  Everything
exhaustive (operators for all subspaces, families, predicates) is computed on
the shared :class:`~qmat.subspace.SubspaceLattice` as numpy arrays indexed by
subspace id.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    AmbientMismatch,
    AxiomViolation,
    FieldTowerMismatch,
    IncompleteTable,
    InvalidRange,
    NotFullRank,
)
from .gf import FiniteField, field_from_json
from .linalg import matmul, rank as mat_rank, transpose
from .subspace import (
    MAX_SUBSPACES,
    Subspace,
    SubspaceLattice,
    in_coordinates,
    lattice,
    ortho,
    subspace_from_json,
)

FAMILY_KINDS = (
    "independents",
    "dependents",
    "circuits",
    "flats",
    "open_spaces",
    "cyclic_spaces",
    "loops",
)


@dataclass
class FamilyReport:
    kind: str
    members: list[Subspace]
    ranks: list[int]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, A):
        return A in set(self.members)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "members": [m.to_json() for m in self.members],
            "ranks": list(self.ranks),
        }


@dataclass(frozen=True)
class Flags:
    independent: bool
    dependent: bool
    circuit: bool
    flat: bool
    open: bool
    cyclic: bool
    loop: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


class QMatroid:
    """A q-matroid ``(F_q^n, r)``.

    ``oracle`` maps a canonical :class:`Subspace` to its rank.  ``bulk``, when
    given, computes the whole rank vector over a lattice at once (used by the
    dual wrapper to avoid per-subspace complements).
    """

    def __init__(
        self,
        n: int,
        F: FiniteField,
        oracle: Callable[[Subspace], int],
        name: str = "",
        bulk: Callable[[SubspaceLattice], np.ndarray] | None = None,
        max_count: int = MAX_SUBSPACES,
    ):
        self.n = n
        self.field = F
        self._oracle = oracle
        self._bulk = bulk
        self.name = name
        self.max_count = max_count
        self._memo: dict[Subspace, int] = {}
        self._ranks: np.ndarray | None = None
        self._closure: np.ndarray | None = None
        self._cyc: np.ndarray | None = None
        self._flags: dict[str, np.ndarray] | None = None
        # minors record how their coordinates relate to the parent space
        self.parent: QMatroid | None = None
        self.coord_basis: tuple | None = None
        self.minor_kind: str | None = None
        self.minor_of: Subspace | None = None

    def __repr__(self):
        label = self.name or "QMatroid"
        return f"<{label} on {self.field}^{self.n}>"

    # -- rank -------------------------------------------------------------------
    def _check(self, A: Subspace) -> None:
        if A.n != self.n or A.field != self.field:
            raise AmbientMismatch(f"{A!r} is not a subspace of {self.field}^{self.n}")

    def rank(self, A: Subspace) -> int:
        self._check(A)
        r = self._memo.get(A)
        if r is None:
            if self._ranks is not None:
                r = int(self._ranks[self.lattice.index[A]])
            else:
                r = int(self._oracle(A))
            self._memo[A] = r
        return r

    def nullity(self, A: Subspace) -> int:
        return A.dim - self.rank(A)

    @property
    def E(self) -> Subspace:
        return Subspace.full(self.field, self.n)

    @property
    def full_rank(self) -> int:
        return self.rank(self.E)

    @property
    def lattice(self) -> SubspaceLattice:
        return lattice(self.n, self.field, self.max_count)

    @property
    def ranks(self) -> np.ndarray:
        """Rank of every subspace, indexed by lattice id."""
        if self._ranks is None:
            lat = self.lattice
            if self._bulk is not None:
                arr = np.asarray(self._bulk(lat), dtype=np.int64)
            else:
                arr = np.array([self.rank(s) for s in lat.subspaces], dtype=np.int64)
            self._ranks = arr
        return self._ranks

    # -- operators over the whole lattice -----------------------------------------
    def closure_ids(self) -> np.ndarray:
        """``cl(A)`` for every subspace id: the sum of lines x with r(A+x) = r(A)."""
        if self._closure is None:
            lat, r = self.lattice, self.ranks
            jl = lat.join_line
            same = r[jl] == r[:, None]
            out = np.empty(lat.N, dtype=np.int64)
            for a in range(lat.N):
                out[a] = _sum_of_lines(lat, np.flatnonzero(same[a]))
            self._closure = out
        return self._closure

    def cyc_ids(self) -> np.ndarray:
        """``cyc(A)`` for every subspace id.

        A line x <= A qualifies when r(B+x) = r(B) for every hyperplane B of A.
        """
        if self._cyc is None:
            lat, r = self.lattice, self.ranks
            jl = lat.join_line
            out = np.empty(lat.N, dtype=np.int64)
            for a in range(lat.N):
                xs = np.array(lat.line_list[a], dtype=np.int64)
                if xs.size == 0:
                    out[a] = a
                    continue
                ok = np.ones(xs.size, dtype=bool)
                for b in lat.hyperplanes[a]:
                    ok &= r[jl[b, xs]] == r[b]
                out[a] = _sum_of_lines(lat, xs[ok])
            self._cyc = out
        return self._cyc

    def flag_arrays(self) -> dict[str, np.ndarray]:
        """Boolean predicate arrays over lattice ids."""
        if self._flags is None:
            lat, r = self.lattice, self.ranks
            dims = lat.dims
            indep = r == dims
            jl = lat.join_line
            ids = np.arange(lat.N)
            flat = ((jl == ids[:, None]) | (r[jl] > r[:, None])).all(axis=1)
            cyclic = np.ones(lat.N, dtype=bool)
            circuit = np.zeros(lat.N, dtype=bool)
            for a in range(lat.N):
                hs = lat.hyperplanes[a]
                if hs:
                    cyclic[a] = bool(np.all(r[hs] == r[a]))
                    circuit[a] = (not indep[a]) and bool(np.all(indep[hs]))
            loop = (dims == 1) & (r == 0)
            self._flags = {
                "independent": indep,
                "dependent": ~indep,
                "circuit": circuit,
                "flat": flat,
                "cyclic": cyclic,
                "open": cyclic,
                "loop": loop,
            }
        return self._flags

    # -- single-subspace API ------------------------------------------------------------
    def closure(self, A: Subspace) -> Subspace:
        self._check(A)
        lat = self.lattice
        return lat[int(self.closure_ids()[lat.index[A]])]

    def cyc(self, A: Subspace) -> Subspace:
        self._check(A)
        lat = self.lattice
        return lat[int(self.cyc_ids()[lat.index[A]])]

    def classify(self, A: Subspace) -> Flags:
        self._check(A)
        i = self.lattice.index[A]
        f = self.flag_arrays()
        return Flags(**{k: bool(v[i]) for k, v in f.items()})

    def family(self, kind: str) -> FamilyReport:
        kinds = {
            "independents": "independent",
            "dependents": "dependent",
            "circuits": "circuit",
            "flats": "flat",
            "open_spaces": "open",
            "cyclic_spaces": "cyclic",
            "loops": "loop",
        }
        if kind not in kinds:
            raise InvalidRange(f"unknown family {kind!r}; expected one of {FAMILY_KINDS}")
        mask = self.flag_arrays()[kinds[kind]]
        return self._report(kind, np.flatnonzero(mask))

    def _report(self, kind: str, ids) -> FamilyReport:
        lat, r = self.lattice, self.ranks
        ids = sorted(int(i) for i in ids)  # ids already follow (dim, key) order
        return FamilyReport(kind, [lat[i] for i in ids], [int(r[i]) for i in ids])

    def open_space_ids(self) -> list[int]:
        """Sums of circuits (plus the zero space), generated by closure under addition."""
        lat = self.lattice
        circuits = [int(c) for c in np.flatnonzero(self.flag_arrays()["circuit"])]
        seen = {lat.bottom}
        frontier = [lat.bottom]
        while frontier:
            nxt = []
            for o in frontier:
                for c in circuits:
                    s = lat.sum_ids(o, c)
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return sorted(seen)

    def circuit_sum(self, A: Subspace) -> Subspace:
        """Sum of all circuits contained in ``A``; equals ``A`` exactly when A is open."""
        lat = self.lattice
        a = lat.id(A)
        acc = lat.bottom
        for c in np.flatnonzero(self.flag_arrays()["circuit"]):
            if lat.leq(int(c), a):
                acc = lat.sum_ids(acc, int(c))
        return lat[acc]

    # -- derived matroids ------------------------------------------------------------------
    def dual(self) -> "QMatroid":
        return dual(self)

    def restrict(self, A: Subspace) -> "QMatroid":
        return minor(self, A, "restrict")

    def contract(self, A: Subspace) -> "QMatroid":
        return minor(self, A, "contract")

    def rank_table(self) -> dict[Subspace, int]:
        lat, r = self.lattice, self.ranks
        return {s: int(r[i]) for i, s in enumerate(lat.subspaces)}

    def same_ranks(self, other: "QMatroid") -> bool:
        return (
            self.n == other.n
            and self.field == other.field
            and bool(np.array_equal(self.ranks, other.ranks))
        )

    def to_json(self) -> dict:
        lat, r = self.lattice, self.ranks
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "ranks": [{"rows": [list(x) for x in s.rows], "rank": int(r[i])} for i, s in enumerate(lat.subspaces)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _sum_of_lines(lat: SubspaceLattice, xs) -> int:
    acc = lat.bottom
    mask = 0
    jl = lat.join_line
    for x in xs:
        x = int(x)
        if (mask >> x) & 1:
            continue
        acc = int(jl[acc, x])
        mask = lat.line_mask[acc]
    return acc


# -- constructions ---------------------------------------------------------------------------
def _as_int_matrix(G, ext: FiniteField) -> list[list[int]]:
    out = []
    for row in G:
        r = []
        for x in row:
            if hasattr(x, "field"):
                if x.field != ext:
                    raise FieldTowerMismatch(f"entry from {x.field}, expected {ext}")
                r.append(int(x.value))
            elif isinstance(x, (list, tuple)):
                r.append(ext.from_coords(x))
            else:
                r.append(ext(int(x)).value)
        out.append(r)
    return out


def check_tower(ext: FiniteField, base: FiniteField) -> int:
    """Return m = [ext : base]; only prime base fields are embedded."""
    if base.e != 1 or base.p != ext.p:
        raise FieldTowerMismatch(f"{ext} is not handled as an extension of {base} (base must be GF({ext.p}))")
    return ext.e


def from_code_matrix(G, ext: FiniteField, base: FiniteField, max_count: int = MAX_SUBSPACES) -> QMatroid:
    """q-matroid of the code generated by ``G``: r(U) = rank over ``ext`` of G A_U^T."""
    check_tower(ext, base)
    Gi = _as_int_matrix(G, ext)
    k = len(Gi)
    n = len(Gi[0]) if Gi else 0
    if any(len(row) != n for row in Gi):
        raise NotFullRank("ragged generator matrix")
    if mat_rank(Gi, ext) != k:
        raise NotFullRank(f"generator matrix has rank {mat_rank(Gi, ext)} < {k}")

    def oracle(U: Subspace) -> int:
        if not U.rows:
            return 0
        return mat_rank(matmul(Gi, transpose(U.rows), ext), ext)

    M = QMatroid(n, base, oracle, name=f"M[G] ({k}x{n} over {ext})", max_count=max_count)
    M.generator = Gi
    M.ext_field = ext
    return M


def uniform(k: int, n: int, F: FiniteField, max_count: int = MAX_SUBSPACES) -> QMatroid:
    if not 0 <= k <= n:
        raise InvalidRange(f"uniform needs 0 <= k <= n, got k={k}, n={n}")
    M = QMatroid(
        n,
        F,
        lambda U: min(k, U.dim),
        name=f"U_{{{k},{n}}}",
        bulk=lambda lat: np.minimum(lat.dims, k),
        max_count=max_count,
    )
    M._memo = _NoMemo()
    return M


class _NoMemo(dict):
    """Closed-form oracles skip memoization."""

    def __setitem__(self, key, value):
        pass


def from_rank_table(table: dict[Subspace, int], n: int | None = None, F: FiniteField | None = None,
                    max_count: int = MAX_SUBSPACES) -> QMatroid:
    """Matroid from a complete rank table, validated against (R1)-(R3)."""
    if not table:
        raise IncompleteTable("empty rank table")
    sample = next(iter(table))
    n = sample.n if n is None else n
    F = sample.field if F is None else F
    lat = lattice(n, F, max_count)
    missing = [s for s in lat.subspaces if s not in table]
    if missing:
        raise IncompleteTable(f"{len(missing)} subspaces missing, first {missing[0].label()}")
    arr = np.array([int(table[s]) for s in lat.subspaces], dtype=np.int64)
    M = QMatroid(n, F, lambda U: int(arr[lat.index[U]]), name="rank table", bulk=lambda _lat: arr,
                 max_count=max_count)
    from .crypto import check_rank_axioms

    report = check_rank_axioms(M)
    if not report.passed:
        first = report.violations[0]
        raise AxiomViolation(f"rank table violates {first.axiom}", report)
    return M


def rank_table_from_json(obj: dict) -> dict[Subspace, int]:
    F = field_from_json(obj["field"])
    n = int(obj["n"])
    return {subspace_from_json({"n": n, "rows": e["rows"]}, F): int(e["rank"]) for e in obj["ranks"]}


def loads(text: str) -> QMatroid:
    obj = json.loads(text)
    return from_rank_table(rank_table_from_json(obj))


def rank(M: QMatroid, A: Subspace) -> int:
    return M.rank(A)


def nullity(M: QMatroid, A: Subspace) -> int:
    return M.nullity(A)


def closure(M: QMatroid, A: Subspace) -> Subspace:
    return M.closure(A)


def cyc(M: QMatroid, A: Subspace) -> Subspace:
    return M.cyc(A)


def classify(M: QMatroid, A: Subspace) -> Flags:
    return M.classify(A)


def family(M: QMatroid, kind: str) -> FamilyReport:
    return M.family(kind)


def dual(M: QMatroid) -> QMatroid:
    """Lazy dual: r*(A) = dim A - r(E) + r(A^perp)."""

    def oracle(A: Subspace) -> int:
        return A.dim - M.full_rank + M.rank(ortho(A))

    def bulk(lat: SubspaceLattice) -> np.ndarray:
        return lat.dims - M.full_rank + M.ranks[lat.ortho]

    D = QMatroid(M.n, M.field, oracle, name=f"dual({M.name or 'M'})", bulk=bulk, max_count=M.max_count)
    return D


def minor(M: QMatroid, A: Subspace, kind: str) -> QMatroid:
    """Restriction ``M|A`` or contraction ``M/A`` in concrete coordinates.

    Restriction lives on F_q^{dim A} via the RREF basis of A.  Contraction lives
    on F_q^{n - dim A} via the standard basis vectors at the non-pivot columns of
    A, a complement of A; use :func:`to_minor_coords` to push subspaces over.
    """
    M._check(A)
    F = M.field
    if kind == "restrict":
        basis = A.rows

        def oracle(T: Subspace) -> int:
            return M.rank(in_coordinates(A, T.rows))

        R = QMatroid(A.dim, F, oracle, name=f"{M.name or 'M'}|A", max_count=M.max_count)
        R.coord_basis = basis
    elif kind == "contract":
        piv = set(A.pivots)
        free = [j for j in range(M.n) if j not in piv]
        rA = M.rank(A)

        def oracle(T: Subspace) -> int:
            lifted = [_lift(row, free, M.n) for row in T.rows]
            return M.rank(Subspace.from_rows(F, M.n, list(A.rows) + lifted)) - rA

        R = QMatroid(len(free), F, oracle, name=f"{M.name or 'M'}/A", max_count=M.max_count)
        R.coord_basis = tuple(tuple(int(i == j) for i in range(M.n)) for j in free)
    else:
        raise InvalidRange(f"minor kind must be 'restrict' or 'contract', not {kind!r}")
    R.parent = M
    R.minor_kind = kind
    R.minor_of = A
    return R


def _lift(row: Sequence[int], free: list[int], n: int) -> list[int]:
    v = [0] * n
    for x, j in zip(row, free):
        v[j] = x
    return v


def to_minor_coords(R: QMatroid, T: Subspace) -> Subspace:
    """Image of a parent subspace ``T`` in the coordinates of the minor ``R``.

    For a restriction T must lie in A; for a contraction T is sent to (T+A)/A.
    """
    M, A, F = R.parent, R.minor_of, R.field
    if M is None:
        raise InvalidRange("not a minor")
    M._check(T)
    if R.minor_kind == "restrict":
        if not T <= A:
            raise AmbientMismatch("T is not inside the restriction space")
        piv = A.pivots
        # RREF basis: coordinates are the entries at A's pivot columns
        return Subspace.from_rows(F, A.dim, [[v[j] for j in piv] for v in T.rows])
    piv = A.pivots
    free = [j for j in range(M.n) if j not in set(piv)]
    rows = []
    for v in T.rows:
        w = list(v)
        for i, pc in enumerate(piv):
            c = w[pc]
            if c:
                w = [F.sub(x, F.mul(c, y)) for x, y in zip(w, A.rows[i])]
        rows.append([w[j] for j in free])
    return Subspace.from_rows(F, len(free), rows)

"""F_{q^m}-linear rank-metric codes and their q-matroids.

Codewords are lists of element ints of the extension field.  The base field is
the prime field, so its elements are the ints ``0..p-1`` inside the extension
as well.  Codeword enumeration is projective: one representative (first
nonzero coefficient 1) per nonzero scalar class.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import AmbientMismatch, DegenerateCode, EnumerationTooLarge, FieldMismatch, NotFullRank
from .gf import FiniteField, expand_over_base
from .linalg import matmul, nullspace, rank as mat_rank, rref, transpose
from .qmatroid import QMatroid, _as_int_matrix, check_tower, dual as matroid_dual, from_code_matrix
from .subspace import MAX_SUBSPACES, Subspace, normalized_vectors, span

MAX_CLASSES = 10**6


@dataclass(frozen=True)
class RankMetricCode:
    """An ``[n, k]_{q^m/q}`` code given by a generator matrix over ``ext``."""

    ext: FiniteField
    base: FiniteField
    G: tuple[tuple[int, ...], ...]
    n: int
    nondegenerate: bool

    @property
    def k(self) -> int:
        return len(self.G)

    @property
    def m(self) -> int:
        return self.ext.e // self.base.e

    @property
    def params(self) -> str:
        return f"[{self.n},{self.k}]_{{{self.ext.q}/{self.base.q}}}"

    def __repr__(self):
        return f"RankMetricCode{self.params}"

    def matroid(self, max_count: int = MAX_SUBSPACES) -> QMatroid:
        if self.k == 0:
            return QMatroid(self.n, self.base, lambda U: 0, name="M[zero code]", max_count=max_count)
        return from_code_matrix([list(r) for r in self.G], self.ext, self.base, max_count)

    def encode(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        F = self.ext
        out = [0] * self.n
        for c, row in zip(coeffs, self.G):
            if c:
                out = [F.add(o, F.mul(c, g)) for o, g in zip(out, row)]
        return tuple(out)

    def projective_words(self):
        """One nonzero codeword per scalar class, with its coefficient vector."""
        count = (self.ext.q**self.k - 1) // (self.ext.q - 1) if self.k else 0
        if count > MAX_CLASSES:
            raise EnumerationTooLarge(f"{count} projective classes exceed {MAX_CLASSES}")
        for lam in normalized_vectors(self.k, self.ext.q) if self.k else ():
            yield lam, self.encode(lam)

    def to_json(self) -> dict:
        return {
            "ext": self.ext.to_json(),
            "base": self.base.to_json(),
            "G": [[self.ext.coords(x) for x in row] for row in self.G],
        }


def _columns_rank(Gi: list[list[int]], ext: FiniteField, n: int) -> int:
    """F_q-dimension of the span of the n columns of G, each expanded over the base."""
    k = len(Gi)
    if k == 0:
        return 0
    vecs = []
    for j in range(n):
        col = [Gi[i][j] for i in range(k)]
        vecs.append([c for entry in expand_over_base(col, ext) for c in entry])
    from .gf import field

    return mat_rank(vecs, field(ext.p))


def new_code(G, ext: FiniteField, base: FiniteField, n: int | None = None) -> RankMetricCode:
    """Validate a generator matrix (rank k over ``ext``) and record nondegeneracy."""
    check_tower(ext, base)
    Gi = _as_int_matrix(G, ext)
    if Gi:
        n = len(Gi[0])
        if any(len(r) != n for r in Gi):
            raise NotFullRank("ragged generator matrix")
        rk = mat_rank(Gi, ext)
        if rk != len(Gi):
            raise NotFullRank(f"generator matrix has rank {rk} < {len(Gi)}")
    elif n is None:
        raise NotFullRank("an empty generator matrix needs an explicit length")
    nondeg = _columns_rank(Gi, ext, n) == n
    return RankMetricCode(ext, base, tuple(tuple(r) for r in Gi), n, nondeg)


def code_from_json(obj: dict) -> RankMetricCode:
    """``{"ext": {...}, "base": {...}, "G": [[[coords], ...], ...]}``."""
    from .gf import field_from_json

    ext = field_from_json(obj["ext"])
    base = field_from_json(obj.get("base", {"p": ext.p}))
    return new_code([[list(x) if isinstance(x, list) else x for x in row] for row in obj["G"]], ext, base,
                    n=obj.get("n"))


def support(v: Sequence[int], ext: FiniteField, basis: Sequence[int] | None = None) -> tuple[Subspace, int]:
    """Gamma-support of ``v`` (column space of its expansion) and its rank weight."""
    for x in v:
        if not isinstance(x, int) or not 0 <= x < ext.q:
            raise FieldMismatch(f"{x!r} is not an element of {ext}")
    from .gf import field

    M = expand_over_base(list(v), ext, basis)
    S = span(transpose(M) if M else [], field(ext.p), len(v))
    return S, S.dim


def dual_code(C: RankMetricCode) -> RankMetricCode:
    """The ``[n, n-k]`` code orthogonal to ``C`` under the standard dot product."""
    if C.k == 0:
        rows = [[1 if i == j else 0 for j in range(C.n)] for i in range(C.n)]
    else:
        rows = nullspace([list(r) for r in C.G], C.ext, C.n)
    return new_code(rows, C.ext, C.base, n=C.n)


def _check_space(C: RankMetricCode, U: Subspace) -> None:
    if U.n != C.n or U.field.p != C.base.p or U.field.e != C.base.e:
        raise AmbientMismatch(f"{U!r} is not a subspace of F_{C.base.q}^{C.n}")


@dataclass
class SubCode:
    dim: int
    basis: list[tuple[int, ...]]


def code_of_space(C: RankMetricCode, U: Subspace) -> SubCode:
    """C(U): codewords c with c.x = 0 for every x in U, found by a linear solve.

    A word lam*G vanishes on U exactly when lam lies in the left kernel of G U^T.
    """
    _check_space(C, U)
    F = C.ext
    if C.k == 0:
        return SubCode(0, [])
    if not U.rows:
        return SubCode(C.k, [tuple(r) for r in C.G])
    H = matmul([list(r) for r in C.G], transpose(U.rows), F)  # k x dim U
    lams = nullspace(transpose(H), F, C.k)
    words = [C.encode(l) for l in lams]
    if words:
        words, _ = rref(words, F, C.n)
    return SubCode(len(lams), [tuple(w) for w in words])


def code_rank(C: RankMetricCode, U: Subspace) -> int:
    """rk(G A_U^T) over the extension field."""
    _check_space(C, U)
    if not U.rows or C.k == 0:
        return 0
    return mat_rank(matmul([list(r) for r in C.G], transpose(U.rows), C.ext), C.ext)


@dataclass
class SupportIndex:
    """Supports mapped to projective codeword representatives, ordered by support."""

    entries: dict[Subspace, list[tuple[int, ...]]] = dc_field(default_factory=dict)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, S):
        return S in self.entries

    def supports(self) -> list[Subspace]:
        return list(self.entries)

    @property
    def words(self) -> int:
        return sum(len(v) for v in self.entries.values())

    def to_json(self) -> dict:
        return {
            "supports": [
                {"support": S.label(), "rows": [list(r) for r in S.rows], "words": [list(w) for w in ws]}
                for S, ws in self.entries.items()
            ],
            "count": self.words,
        }


def _index(pairs) -> SupportIndex:
    buckets: dict[Subspace, list[tuple[int, ...]]] = {}
    for S, w in pairs:
        buckets.setdefault(S, []).append(w)
    return SupportIndex({S: buckets[S] for S in sorted(buckets, key=lambda s: s.key)})


def _class_supports(C: RankMetricCode, basis=None) -> list[tuple[Subspace, tuple[int, ...]]]:
    return [(support(w, C.ext, basis)[0], w) for _, w in C.projective_words()]


def distinct_supports(C: RankMetricCode) -> SupportIndex:
    return _index(_class_supports(C))


def minimal_codewords(C: RankMetricCode) -> SupportIndex:
    """Classes whose support contains the support of no other class.

    Two classes with the same support are both non-minimal.
    """
    classes = sorted(_class_supports(C), key=lambda p: p[0].dim)
    keep = []
    for i, (S, w) in enumerate(classes):
        minimal = True
        for j, (T, _) in enumerate(classes):
            if j != i and T.dim <= S.dim and T <= S:
                minimal = False
                break
        if minimal:
            keep.append((S, w))
    return _index(keep)


def fqm_independent(C: RankMetricCode, W: Subspace) -> bool:
    """Are the images sum_i w_i g_i of a basis of W independent over F_{q^m}?"""
    if not C.nondegenerate:
        raise DegenerateCode("independence over the extension needs a nondegenerate code")
    _check_space(C, W)
    if not W.rows:
        return True
    images = transpose(matmul([list(r) for r in C.G], transpose(W.rows), C.ext))
    return mat_rank(images, C.ext) == W.dim


@dataclass
class BridgeReport:
    dual_supports_dependent: bool
    dual_supports_cyclic: bool
    circuits_are_minimal_supports: bool
    supports_are_sums_of_minimal: bool
    circuits: list[Subspace]
    details: list[str] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.dual_supports_dependent and self.dual_supports_cyclic
                and self.circuits_are_minimal_supports and self.supports_are_sums_of_minimal)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "dual_supports_dependent": self.dual_supports_dependent,
            "dual_supports_cyclic": self.dual_supports_cyclic,
            "circuits_are_minimal_supports": self.circuits_are_minimal_supports,
            "supports_are_sums_of_minimal": self.supports_are_sums_of_minimal,
            "circuits": [S.label() for S in self.circuits],
            "details": self.details,
        }


def bridge_checks(C: RankMetricCode, max_count: int = MAX_SUBSPACES) -> BridgeReport:
    """Run the support/matroid correspondences between C, its dual and M_C."""
    if not C.nondegenerate:
        raise DegenerateCode("bridge checks need a nondegenerate code")
    M = C.matroid(max_count)
    D = dual_code(C)
    details = []
    dual_sup = distinct_supports(D)
    dependent = all(not M.classify(S).independent for S in dual_sup.supports())
    cyclic = all(M.classify(S).cyclic for S in dual_sup.supports())
    if not dependent:
        details.append("a support of the dual code is independent in M_C")
    if not cyclic:
        details.append("a support of the dual code is not cyclic in M_C")
    circuits = M.family("circuits").members
    minimal = set(minimal_codewords(D).supports())
    circ_ok = set(circuits) == minimal
    if not circ_ok:
        details.append(f"{len(circuits)} circuits vs {len(minimal)} minimal supports of the dual code")
    mins = minimal_codewords(C).supports()
    sums_ok = True
    zero = Subspace.zero(C.base, C.n)
    for S in distinct_supports(C).supports():
        acc = zero
        for T in mins:
            if T <= S:
                acc = acc + T
        if acc != S:
            sums_ok = False
            details.append(f"{S.label()} is not the sum of the minimal supports inside it")
            break
    return BridgeReport(dependent, cyclic, circ_ok, sums_ok, circuits, details)


def matroid_of_dual(C: RankMetricCode) -> QMatroid:
    """M_C* built as the dual q-matroid; compare with ``dual_code(C).matroid()``."""
    return matroid_dual(C.matroid())


def random_code(q: int, m: int, k: int, n: int, rng, max_tries: int = 1000) -> RankMetricCode:
    """A uniformly drawn full-rank, nondegenerate ``[n, k]_{q^m/q}`` code.

    ``q`` must be prime.  Nondegeneracy needs n <= m k.
    """
    from .gf import field

    if n > m * k:
        raise DegenerateCode(f"no nondegenerate [{n},{k}] code over F_{q}^{m}: need n <= m k")
    ext, base = field(q, m), field(q)
    for _ in range(max_tries):
        G = [[int(x) for x in rng.integers(0, ext.q, size=n)] for _ in range(k)]
        if mat_rank(G, ext) != k:
            continue
        C = new_code(G, ext, base)
        if C.nondegenerate:
            return C
    raise DegenerateCode("no nondegenerate code found; try another seed")

"""Brute-force reference implementations, independent of the qmat package.

Subspaces are frozensets of vectors (tuples over 0..p-1).  Field arithmetic for
GF(p^e) is plain polynomial multiplication modulo the given modulus.  Every
predicate follows its textbook definition with no shortcuts, so this is slow
and only meant for the small samples.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


class PolyField:
    """GF(p^e) with elements encoded as sum c_i p^i (coefficients low to high)."""

    def __init__(self, p: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = len(modulus) - 1
        self.q = p**self.e
        self.mod = modulus

    def coeffs(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def enc(self, c) -> int:
        return sum((x % self.p) * self.p**i for i, x in enumerate(c))

    def add(self, a: int, b: int) -> int:
        return self.enc([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        return self.enc([-x for x in self.coeffs(a)])

    def mul(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.e)
        for i, x in enumerate(ca):
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for d in range(len(prod) - 1, self.e - 1, -1):
            c = prod[d]
            if c:
                for i, m in enumerate(self.mod):
                    prod[d - self.e + i] = (prod[d - self.e + i] - c * m) % self.p
        return self.enc(prod[: self.e])

    def pow(self, a: int, k: int) -> int:
        out = 1
        for _ in range(k):
            out = self.mul(out, a)
        return out


def prime_field(p: int) -> PolyField:
    return PolyField(p, (0, 1))


def vec_add(F: PolyField, u, v):
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_scale(F: PolyField, c, v):
    return tuple(F.mul(c, a) for a in v)


def dot(F: PolyField, u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


def span(F: PolyField, vectors, n: int) -> frozenset:
    """All F-linear combinations (closure under + and scalars)."""
    S = {tuple([0] * n)}
    for v in vectors:
        S = {vec_add(F, s, vec_scale(F, c, v)) for s in S for c in range(F.q)}
    return frozenset(S)


def dim_of(S: frozenset, q: int) -> int:
    d, size = 0, 1
    while size < len(S):
        size *= q
        d += 1
    return d


@lru_cache(maxsize=None)
def all_subspaces(p: int, n: int) -> tuple[frozenset, ...]:
    """Every subspace of F_p^n, built by adding one vector at a time."""
    F = prime_field(p)
    zero = frozenset({tuple([0] * n)})
    seen = {zero}
    frontier = [zero]
    vecs = list(product(range(p), repeat=n))
    while frontier:
        nxt = []
        for S in frontier:
            for v in vecs:
                if v not in S:
                    T = span(F, list(_basis(F, S, n)) + [v], n)
                    if T not in seen:
                        seen.add(T)
                        nxt.append(T)
        frontier = nxt
    return tuple(sorted(seen, key=len))


def _basis(F: PolyField, S: frozenset, n: int):
    basis, cur = [], frozenset({tuple([0] * n)})
    for v in sorted(S):
        if v not in cur:
            basis.append(v)
            cur = span(F, basis, n)
    return basis


def lines_in(S: frozenset, p: int):
    """1-dimensional subspaces of S."""
    F = prime_field(p)
    n = len(next(iter(S)))
    out = set()
    for v in S:
        if any(v):
            out.add(span(F, [v], n))
    return out


def hyperplanes_in(S: frozenset, subs, q: int):
    d = dim_of(S, q)
    return [T for T in subs if dim_of(T, q) == d - 1 and T <= S]


def ssum(F, A, B, n):
    return span(F, list(A) + list(B), n)


def orth(F: PolyField, A: frozenset, n: int) -> frozenset:
    return frozenset(v for v in product(range(F.p), repeat=n) if all(dot(F, v, a) == 0 for a in A))


# -- code matroids -----------------------------------------------------------------------
def codewords(ext: PolyField, G):
    k, n = len(G), len(G[0])
    out = []
    for lam in product(range(ext.q), repeat=k):
        w = tuple([0] * n)
        for c, row in zip(lam, G):
            w = vec_add(ext, w, vec_scale(ext, c, row))
        out.append(w)
    return out


def code_rank_function(ext: PolyField, G):
    """r(U) = k - dim C(U), C(U) = words orthogonal to every vector of U."""
    words = codewords(ext, G)
    k = len(G)

    def r(U: frozenset) -> int:
        cnt = sum(1 for w in words if all(dot(ext, w, u) == 0 for u in U))
        return k - dim_of_count(cnt, ext.q)

    return r


def dim_of_count(count: int, q: int) -> int:
    d = 0
    while q**d < count:
        d += 1
    return d


def gamma_support(ext: PolyField, v, n: int) -> frozenset:
    """Span over F_p of the coefficient columns of v in the power basis."""
    F = prime_field(ext.p)
    cols = [tuple(ext.coeffs(x)[j] for x in v) for j in range(ext.e)]
    return span(F, cols, n)


# -- matroid predicates straight from the definitions ---------------------------------------
class BruteMatroid:
    def __init__(self, p: int, n: int, r):
        self.p, self.n = p, n
        self.F = prime_field(p)
        self.subs = all_subspaces(p, n)
        self.rank = {S: r(S) for S in self.subs}

    def dim(self, S):
        return dim_of(S, self.p)

    def independent(self, S):
        return self.rank[S] == self.dim(S)

    def circuit(self, S):
        return (not self.independent(S)) and all(
            self.independent(T) for T in self.subs if T < S
        )

    def flat(self, S):
        return all(
            self.rank[ssum(self.F, S, x, self.n)] > self.rank[S]
            for x in lines_in(frozenset(product(range(self.p), repeat=self.n)), self.p)
            if not x <= S
        )

    def cyclic(self, S):
        return all(self.rank[T] == self.rank[S] for T in hyperplanes_in(S, self.subs, self.p))

    def closure(self, S):
        acc = S
        for x in lines_in(frozenset(product(range(self.p), repeat=self.n)), self.p):
            if self.rank[ssum(self.F, S, x, self.n)] == self.rank[S]:
                acc = ssum(self.F, acc, x, self.n)
        return acc

    def cyc(self, S):
        acc = frozenset({tuple([0] * self.n)})
        hyper = hyperplanes_in(S, self.subs, self.p)
        for x in lines_in(S, self.p):
            if all(self.rank[ssum(self.F, B, x, self.n)] == self.rank[B] for B in hyper):
                acc = ssum(self.F, acc, x, self.n)
        return acc


def rref_key(S: frozenset, p: int, n: int) -> tuple:
    """Canonical reduced row echelon basis of S (for comparing with the package)."""
    F = prime_field(p)
    rows = [list(v) for v in _basis(F, S, n)]
    piv_row = 0
    for col in range(n):
        pr = next((i for i in range(piv_row, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[piv_row], rows[pr] = rows[pr], rows[piv_row]
        inv = pow(rows[piv_row][col], p - 2, p)
        rows[piv_row] = [(x * inv) % p for x in rows[piv_row]]
        for i in range(len(rows)):
            if i != piv_row and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[piv_row])]
        piv_row += 1
    return tuple(tuple(r) for r in rows[:piv_row])

"""Axiom checkers (rank, independence, open spaces, cyclic flats) and the
reconstruction of a q-matroid from its cyclic flats by convolution.

Every checker returns an :class:`AxiomReport`.  Violations carry the operand
subspaces themselves, so a failure can be replayed without the original run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .cycflats import CyclicFlatLattice, _as_lattice, cyclic_flats
from .errors import AmbientMismatch, InvalidRange, InvalidZLattice, NotALattice
from .gf import FiniteField
from .qmatroid import QMatroid
from .subspace import MAX_SUBSPACES, Subspace, SubspaceLattice

MAX_VIOLATIONS = 100
_CHUNK = 512


@dataclass
class Violation:
    axiom: str
    witness: tuple[Subspace, ...]
    observed: dict

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "witness": [{"n": w.n, "rows": [list(r) for r in w.rows], "label": w.label()} for w in self.witness],
            "observed": self.observed,
        }


@dataclass
class AxiomReport:
    """Outcome of one axiom scheme: ``passed`` iff there are no violations.

    ``notes`` holds logged observations that do not fail the check, and
    ``truncated`` counts violations beyond the stored cap.
    """

    scheme: str
    violations: list[Violation] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)
    truncated: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, axiom: str, witness: Sequence[Subspace], **observed) -> None:
        if len(self.violations) >= MAX_VIOLATIONS:
            self.truncated += 1
            return
        obs = {k: (int(v) if isinstance(v, (int, np.integer)) else v) for k, v in observed.items()}
        self.violations.append(Violation(axiom, tuple(witness), obs))

    def to_json(self) -> dict:
        out = {"scheme": self.scheme, "passed": self.passed, "violations": [v.to_json() for v in self.violations]}
        if self.notes:
            out["notes"] = list(self.notes)
        if self.truncated:
            out["truncated"] = self.truncated
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def summary(self) -> str:
        if self.passed:
            return f"{self.scheme}: passed"
        axioms = sorted({v.axiom for v in self.violations})
        return f"{self.scheme}: {len(self.violations) + self.truncated} violation(s) of {', '.join(axioms)}"


# -- rank axioms -------------------------------------------------------------------------------
def check_rank_axioms(M: QMatroid) -> AxiomReport:
    """(R1) on every subspace, (R2) on every comparable pair, (R3) on every pair."""
    return check_rank_function(M.lattice, M.ranks)


def check_rank_function(lat: SubspaceLattice, r: np.ndarray, scale: int = 1, scheme: str = "R",
                        names: tuple[str, str, str] = ("R1", "R2", "R3")) -> AxiomReport:
    """Boundedness 0 <= r <= scale*dim, monotonicity and submodularity of ``r``.

    ``r`` is indexed by lattice id.  ``scale`` > 1 gives the polymatroid bound.
    """
    dims = lat.dims
    subs = lat.subspaces
    rep = AxiomReport(scheme)
    b1, b2, b3 = names
    for a in np.flatnonzero((r < 0) | (r > scale * dims)):
        rep.add(b1, [subs[a]], rank=r[a], dim=dims[a])
    S = lat.sum_table
    Mt = lat.meet_table
    ids = np.arange(lat.N)
    for start in range(0, lat.N, _CHUNK):
        rows = slice(start, min(start + _CHUNK, lat.N))
        meet = Mt[rows]
        leq = meet == ids[rows, None]
        bad = leq & (r[rows, None] > r[None, :])
        for i, j in np.argwhere(bad):
            a, b = start + int(i), int(j)
            rep.add(b2, [subs[a], subs[b]], rank_A=r[a], rank_B=r[b])
        lhs = r[S[rows]] + r[meet]
        rhs = r[rows, None] + r[None, :]
        for i, j in np.argwhere(lhs > rhs):
            a, b = start + int(i), int(j)
            rep.add(b3, [subs[a], subs[b]], rank_sum=r[S[a, b]], rank_meet=r[Mt[a, b]],
                    rank_A=r[a], rank_B=r[b])
    return rep


# -- family axioms -------------------------------------------------------------------------------
def _family_mask(lat: SubspaceLattice, members: Iterable[Subspace]) -> np.ndarray:
    mask = np.zeros(lat.N, dtype=bool)
    for s in members:
        mask[lat.id(s)] = True
    return mask


def check_family_axioms(M: QMatroid | SubspaceLattice, scheme: str,
                        members: Iterable[Subspace] | None = None) -> AxiomReport:
    """Check the independence (``"I"``) or open-space (``"O"``) axioms.

    The family is taken from ``M`` unless ``members`` is given, in which case
    ``M`` only supplies the ambient space (a matroid or a lattice).
    """
    if scheme not in ("I", "O"):
        raise InvalidRange(f"family scheme must be 'I' or 'O', got {scheme!r}")
    lat = M if isinstance(M, SubspaceLattice) else M.lattice
    if members is None:
        if not isinstance(M, QMatroid):
            raise InvalidRange("a family is needed when no matroid is given")
        key = "independent" if scheme == "I" else "open"
        fam = M.flag_arrays()[key].copy()
    else:
        fam = _family_mask(lat, members)
    if scheme == "I":
        return _check_independence(lat, fam)
    return _check_open(lat, fam)


def _contains_matrix(lat: SubspaceLattice, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """``out[i, j] = subspace rows[i] >= subspace cols[j]`` via line incidence."""
    inc = lat.line_incidence.astype(np.float32)
    common = inc[rows] @ inc[cols].T
    nlines = inc[cols].sum(axis=1)
    return common == nlines[None, :]


def _check_independence(lat: SubspaceLattice, fam: np.ndarray) -> AxiomReport:
    rep = AxiomReport("I")
    subs, dims, jl = lat.subspaces, lat.dims, lat.join_line
    if not fam.any():
        rep.add("I1", [], size=0)
        return rep
    ids = np.flatnonzero(fam)
    # (I2): checking hyperplanes of members suffices, every chain descends through covers
    for j in ids:
        for h in lat.hyperplanes[j]:
            if not fam[h]:
                rep.add("I2", [subs[h], subs[j]], member=False)
    # (I3): ext[i, x] marks lines x outside I with I + x in the family
    ext = fam[jl[ids]] & (jl[ids] != ids[:, None])
    inc = lat.line_incidence[ids].astype(np.float32)
    reach = inc @ ext.astype(np.float32).T  # reach[J, I] = #lines of J that extend I
    bad = (reach == 0) & (dims[ids][:, None] > dims[ids][None, :])
    for jj, ii in np.argwhere(bad):
        rep.add("I3", [subs[ids[ii]], subs[ids[jj]]], dim_I=dims[ids[ii]], dim_J=dims[ids[jj]])
    if not rep.passed:
        rep.notes.append("I4 skipped: it is evaluated only once I1-I3 hold")
        return rep
    _check_i4(lat, fam, ids, ext, rep)
    return rep


def _check_i4(lat: SubspaceLattice, fam: np.ndarray, ids: np.ndarray, ext: np.ndarray, rep: AxiomReport) -> None:
    """(I4) with max(.) read as the inclusion-maximal members inside A.

    With (I1)-(I3) in force all maximal members inside a space share one
    dimension r_I(A).  A member K <= I + J is then maximal in A + B exactly when
    dim K = r_I(A + B), so the axiom says r_I(I + J) >= r_I(A + B) whenever I is
    maximal in A and J is maximal in B.
    """
    subs, dims = lat.subspaces, lat.dims
    all_ids = np.arange(lat.N)
    inside = _contains_matrix(lat, all_ids, ids)  # inside[A, I] = I <= A
    rI = np.where(inside, dims[ids][None, :], 0).max(axis=1)
    inc = lat.line_incidence.astype(np.float32)
    blocked = (inc @ ext.astype(np.float32).T) > 0  # some line of A extends I
    maximal = inside & ~blocked
    S = lat.sum_table
    T = rI[S[np.ix_(ids, ids)]]  # r_I(I + J) for member pairs
    h = np.empty((lat.N, len(ids)), dtype=np.int64)
    for a in range(lat.N):
        h[a] = T[maximal[a]].min(axis=0)
    for b in range(lat.N):
        g = h[:, maximal[b]].min(axis=1)
        need = rI[S[:, b]]
        for a in np.flatnonzero(g < need):
            rep.add("I4", [subs[a], subs[b]], r_sum=need[a], best=g[a])


def _check_open(lat: SubspaceLattice, fam: np.ndarray) -> AxiomReport:
    rep = AxiomReport("O")
    subs = lat.subspaces
    if not fam[lat.bottom]:
        rep.add("O1", [subs[lat.bottom]], member=False)
    ids = np.flatnonzero(fam)
    if len(ids) == 0:
        return rep
    sums = lat.sum_table[np.ix_(ids, ids)]
    for k, l in np.argwhere(~fam[sums]):
        if k <= l:
            rep.add("O2", [subs[ids[k]], subs[ids[l]]], sum=subs[sums[k, l]].label())
    # covers inside the family ordered by inclusion
    le = _contains_matrix(lat, ids, ids).T  # le[i, j] = member i <= member j
    lt = le & ~np.eye(len(ids), dtype=bool)
    between = (lt.astype(np.float32) @ lt.astype(np.float32)) > 0
    covers = lt & ~between  # covers[i, j]: member j covers member i
    hyper = np.array(lat.hyperplanes[lat.top], dtype=np.int64)
    in_x = _contains_matrix(lat, hyper, ids).T  # in_x[i, h] = member i <= hyperplane h
    count = covers.T.astype(np.float32) @ in_x.astype(np.float32)  # count[O, X]
    for k, hh in np.argwhere(~in_x & (count != 1)):
        rep.add("O3", [subs[ids[k]], subs[hyper[hh]]], lower_covers_in_X=int(count[k, hh]))
    return rep


# -- cyclic-flat axioms -------------------------------------------------------------------------------
def check_Z_axioms(Z) -> AxiomReport:
    """(Z1)-(Z3), plus the derived checks extraZ4 and the strict upper bound of
    r(F) - r(G) for F not inside G.  The matching lower bound is only logged.

    ``Z`` is a :class:`CyclicFlatLattice`, a matroid, or ``(subspace, rank)``
    pairs.  Raises :class:`NotALattice` when meet or join leave the node set.
    """
    L = _as_lattice(Z)
    rep = AxiomReport("Z")
    nodes, r = L.nodes, L.ranks
    dim = [s.dim for s in nodes]
    if r[L.bottom] != 0:
        rep.add("Z1", [nodes[L.bottom]], rank=r[L.bottom])
    z = len(nodes)
    for f in range(z):
        F = nodes[f]
        for g in range(z):
            G = nodes[g]
            if f != g and L.leq[g, f]:
                gap, room = r[f] - r[g], dim[f] - dim[g]
                if not 0 < gap < room:
                    rep.add("Z2", [F, G], rank_gap=gap, dim_gap=room)
            j, m = L.join_table[f][g], L.meet_table[f][g]
            inter = (F & G).dim
            if r[f] + r[g] < r[j] + r[m] + inter - dim[m]:
                rep.add("Z3", [F, G], rank_F=r[f], rank_G=r[g], rank_join=r[j], rank_meet=r[m],
                        dim_cap=inter, dim_meet=dim[m])
            if r[j] > r[g] + dim[f] - inter:
                rep.add("extraZ4", [F, G], rank_join=r[j], rank_G=r[g], dim_F=dim[f], dim_cap=inter)
            if not L.leq[f, g]:
                if not r[f] - r[g] < dim[f] - inter:
                    rep.add("general", [F, G], rank_gap=r[f] - r[g], dim_gap=dim[f] - inter)
                if not r[f] - r[g] > 0:
                    rep.notes.append(
                        f"general (lower bound, not enforced): r({F.label()}) - r({G.label()}) = {r[f] - r[g]}"
                    )
    return rep


def _validated(n: int, F: FiniteField, Z) -> CyclicFlatLattice:
    try:
        L = _as_lattice(Z)
    except NotALattice as exc:
        raise InvalidZLattice(str(exc)) from exc
    if L.n != n or L.field != F:
        raise AmbientMismatch(f"lattice lives in {L.field}^{L.n}, not {F}^{n}")
    rep = check_Z_axioms(L)
    if not rep.passed:
        raise InvalidZLattice(rep.summary())
    return L


def convolution_matroid(n: int, F: FiniteField, Z, max_count: int = MAX_SUBSPACES) -> QMatroid:
    """The q-matroid with rank r_Z(A) = min over nodes of r(F) + dim(A+F) - dim F."""
    L = _validated(n, F, Z)
    nodes = list(L)

    def oracle(A: Subspace) -> int:
        return min(rF + (A + N).dim - N.dim for N, rF in nodes)

    def bulk(lat: SubspaceLattice) -> np.ndarray:
        best = lat.dims.copy() + n + 1
        base = np.arange(lat.N)
        for N, rF in nodes:
            col = base
            for x in lat.basis_lines[lat.id(N)]:
                col = lat.join_line[col, x]
            best = np.minimum(best, rF + lat.dims[col] - N.dim)
        return best

    M = QMatroid(n, F, oracle, name="convolution", bulk=bulk, max_count=max_count)
    M.source_lattice = L
    return M


@dataclass
class RoundtripReport:
    passed: bool
    subspaces: int
    ranks_equal: bool
    nodes_equal: bool
    first_divergence: dict | None = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "subspaces": self.subspaces,
            "ranks_equal": self.ranks_equal,
            "nodes_equal": self.nodes_equal,
            "first_divergence": self.first_divergence,
        }


def roundtrip_verify(M: QMatroid) -> RoundtripReport:
    """Rebuild ``M`` from its cyclic flats and compare everything."""
    L = cyclic_flats(M)
    MZ = convolution_matroid(M.n, M.field, L, max_count=M.max_count)
    lat = M.lattice
    diff = np.flatnonzero(M.ranks != MZ.ranks)
    first = None
    if len(diff):
        a = int(diff[0])
        first = {"subspace": lat[a].label(), "rank": int(M.ranks[a]), "rank_Z": int(MZ.ranks[a])}
    LZ = cyclic_flats(MZ)
    nodes_equal = list(LZ) == list(L)
    if first is None and not nodes_equal:
        first = {"nodes": [s.label() for s in L.nodes], "nodes_Z": [s.label() for s in LZ.nodes]}
    return RoundtripReport(first is None, lat.N, len(diff) == 0, nodes_equal, first)

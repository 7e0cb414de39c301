"""The lattice of cyclic flats and everything that can be read off it.

A :class:`CyclicFlatLattice` is plain data: subspaces with integer ranks.  Its
meet and join are computed from containment alone (join = least node containing
the sum, meet = greatest node inside the intersection), which agrees with
cl(F1 + F2) and cyc(F1 & F2) when the data comes from a q-matroid.  That lets
the same object serve as the input of the convolution reconstruction.
"""

from __future__ import annotations

import json
from typing import Sequence

import numpy as np

from .errors import InvalidZLattice, NotALattice, NotANode, QMatError
from .gf import field_from_json
from .qmatroid import FamilyReport, QMatroid
from .subspace import Subspace, lattice, subspace_from_json


class CyclicFlatLattice:
    """Nodes (subspaces with ranks), Hasse edges and meet/join tables.

    ``nodes`` are kept sorted by (dim, canonical key).  ``bottom``/``top`` are
    node indices.  ``matroid`` is set when the lattice was computed from one.
    """

    def __init__(self, nodes: Sequence[Subspace], ranks: Sequence[int], matroid: QMatroid | None = None):
        if not nodes:
            raise NotALattice("a lattice needs at least one node")
        if len(nodes) != len(ranks):
            raise NotALattice("nodes and ranks differ in length")
        pairs = sorted(zip(nodes, ranks), key=lambda p: p[0].key)
        self.nodes = [p[0] for p in pairs]
        self.ranks = [int(p[1]) for p in pairs]
        if len(set(self.nodes)) != len(self.nodes):
            raise NotALattice("duplicate nodes")
        first = self.nodes[0]
        self.n = first.n
        self.field = first.field
        for s in self.nodes:
            s._check(first)
        self.matroid = matroid
        self.notes: list[str] = []
        self._index = {s: i for i, s in enumerate(self.nodes)}
        z = len(self.nodes)
        le = np.zeros((z, z), dtype=bool)
        for i, a in enumerate(self.nodes):
            for j, b in enumerate(self.nodes):
                le[i, j] = a.dim <= b.dim and a <= b
        self.leq = le
        self.bottom = self._unique_extreme(le.all(axis=1), "bottom")
        self.top = self._unique_extreme(le.all(axis=0), "top")
        self.join_table = [[self._least_above(self.nodes[i] + self.nodes[j]) for j in range(z)] for i in range(z)]
        self.meet_table = [[self._greatest_below(self.nodes[i] & self.nodes[j]) for j in range(z)] for i in range(z)]
        self.hasse_edges = hasse_edges(self.nodes, le)

    # -- structure ------------------------------------------------------------------
    def _unique_extreme(self, mask, what: str) -> int:
        idx = np.flatnonzero(mask)
        if len(idx) != 1:
            raise NotALattice(f"no unique {what} element")
        return int(idx[0])

    def _least_above(self, S: Subspace) -> int:
        cands = [i for i, s in enumerate(self.nodes) if S <= s]
        least = [i for i in cands if all(self.leq[i, j] for j in cands)]
        if len(least) != 1:
            raise NotALattice(f"no least node containing {S.label()}")
        return least[0]

    def _greatest_below(self, S: Subspace) -> int:
        cands = [i for i, s in enumerate(self.nodes) if s <= S]
        greatest = [i for i in cands if all(self.leq[j, i] for j in cands)]
        if len(greatest) != 1:
            raise NotALattice(f"no greatest node inside {S.label()}")
        return greatest[0]

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(zip(self.nodes, self.ranks))

    def index(self, F: Subspace) -> int:
        try:
            return self._index[F]
        except KeyError:
            raise NotANode(f"{F.label()} is not a node of the lattice") from None

    def rank_of(self, F: Subspace) -> int:
        return self.ranks[self.index(F)]

    @property
    def bottom_node(self) -> Subspace:
        return self.nodes[self.bottom]

    @property
    def top_node(self) -> Subspace:
        return self.nodes[self.top]

    def meet(self, F1: Subspace, F2: Subspace) -> Subspace:
        return self.nodes[self.meet_table[self.index(F1)][self.index(F2)]]

    def join(self, F1: Subspace, F2: Subspace) -> Subspace:
        return self.nodes[self.join_table[self.index(F1)][self.index(F2)]]

    def join_all(self, S: Subspace) -> Subspace:
        """Least node containing ``S``."""
        return self.nodes[self._least_above(S)]

    def meet_all(self, S: Subspace) -> Subspace:
        """Greatest node contained in ``S``."""
        return self.nodes[self._greatest_below(S)]

    # -- export -------------------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "nodes": [{"rows": [list(r) for r in s.rows], "rank": r, "label": s.label()} for s, r in self],
            "bottom": self.bottom,
            "top": self.top,
            "edges": [list(e) for e in self.hasse_edges],
            "meet": self.meet_table,
            "join": self.join_table,
        }

    def to_dot(self, name: str = "cyclic_flats") -> str:
        return export_dot(self.nodes, self.ranks, name=name, edges=self.hasse_edges)


def lattice_from_json(obj: dict) -> CyclicFlatLattice:
    F = field_from_json(obj["field"])
    n = int(obj["n"])
    nodes = [subspace_from_json({"n": n, "rows": e["rows"]}, F) for e in obj["nodes"]]
    return CyclicFlatLattice(nodes, [int(e["rank"]) for e in obj["nodes"]])


def hasse_edges(nodes: Sequence[Subspace], le: np.ndarray | None = None) -> list[tuple[int, int]]:
    """Cover pairs ``(i, j)`` (node i covered by node j): the transitive reduction of <=."""
    z = len(nodes)
    if le is None:
        le = np.array([[a.dim <= b.dim and a <= b for b in nodes] for a in nodes], dtype=bool)
    lt = le & ~np.eye(z, dtype=bool)
    edges = []
    for i in range(z):
        for j in range(z):
            if lt[i, j] and not np.any(lt[i, :] & lt[:, j]):
                edges.append((i, j))
    return edges


def export_dot(nodes: Sequence[Subspace], ranks: Sequence[int], name: str = "lattice",
               edges: Sequence[tuple[int, int]] | None = None) -> str:
    """Deterministic DOT text for a Hasse diagram, bottom to top."""
    if edges is None:
        edges = hasse_edges(nodes)
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, (s, r) in enumerate(zip(nodes, ranks)):
        lines.append(f'  n{i} [label="{s.label()}\\nr = {r}"];')
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- construction from a matroid ---------------------------------------------------------
def cyclic_flat_ids(M: QMatroid) -> list[int]:
    """Lattice ids of the cyclic flats: closures of open spaces, filtered to flats.

    Open spaces are generated as sums of circuits; the result is cross-checked
    against the direct scan for spaces that are both flat and cyclic.
    """
    lat = M.lattice
    flags = M.flag_arrays()
    cl = M.closure_ids()
    found = sorted({int(cl[o]) for o in M.open_space_ids()})
    found = [i for i in found if flags["flat"][i]]
    direct = [int(i) for i in np.flatnonzero(flags["flat"] & flags["cyclic"])]
    if found != direct:
        raise QMatError(
            "cyclic flats from circuit closures disagree with the flat-and-cyclic scan: "
            f"{[lat[i].label() for i in found]} vs {[lat[i].label() for i in direct]}"
        )
    return found


def cyclic_flats(M: QMatroid) -> CyclicFlatLattice:
    lat = M.lattice
    ids = cyclic_flat_ids(M)
    L = CyclicFlatLattice([lat[i] for i in ids], [int(M.ranks[i]) for i in ids], matroid=M)
    zero = Subspace.zero(M.field, M.n)
    bottom, top = M.closure(zero), M.cyc(M.E)
    if bottom != L.bottom_node:
        L.notes.append(f"cl(0) = {bottom.label()} is not the bottom node {L.bottom_node.label()}")
    if top != L.top_node:
        L.notes.append(f"cyc(E) = {top.label()} is not the top node {L.top_node.label()}")
    return L


def meet(L: CyclicFlatLattice, F1: Subspace, F2: Subspace) -> Subspace:
    return L.meet(F1, F2)


def join(L: CyclicFlatLattice, F1: Subspace, F2: Subspace) -> Subspace:
    return L.join(F1, F2)


def _as_lattice(Z) -> CyclicFlatLattice:
    if isinstance(Z, CyclicFlatLattice):
        return Z
    if isinstance(Z, QMatroid):
        return cyclic_flats(Z)
    nodes, ranks = zip(*Z)
    return CyclicFlatLattice(list(nodes), list(ranks))


def f_bounds(Z, F: Subspace) -> tuple[Subspace, Subspace]:
    """``(F_vee, F_wedge)`` from the lattice data alone.

    F_vee is the join of the nodes below F; F_wedge the meet of the nodes above
    F, where an empty intersection is the whole space (so F_wedge = top node).
    """
    L = _as_lattice(Z)
    below = [s for s in L.nodes if s <= F]
    acc = Subspace.zero(L.field, L.n)
    for s in below:
        acc = acc + s
    vee = L.join_all(acc)
    inter = Subspace.full(L.field, L.n)
    for s in L.nodes:
        if F <= s:
            inter = inter & s
    wedge = L.meet_all(inter)
    return vee, wedge


def flat_test(L: CyclicFlatLattice, F: Subspace, bounds=None) -> bool:
    """Decide flatness of ``F`` from nodes and ranks only."""
    vee, wedge = bounds or f_bounds(L, F)
    if not vee <= F:
        return False
    n_vee = vee.dim - L.rank_of(vee)
    for A, rA in L:
        if vee <= A and A != vee and A <= wedge:
            if (F & A).dim - rA >= n_vee:
                return False
    return True


def reconstruct_flats(Z, max_count: int | None = None) -> FamilyReport:
    """All flats and their ranks, recovered from the cyclic flats and their ranks."""
    from .crypto import check_Z_axioms

    L = _as_lattice(Z)
    report = check_Z_axioms(L)
    if not report.passed:
        raise InvalidZLattice(f"Z violates {report.violations[0].axiom}")
    lat = lattice(L.n, L.field) if max_count is None else lattice(L.n, L.field, max_count)
    node_ids = [lat.id(s) for s in L.nodes]
    node_rank = dict(zip(node_ids, L.ranks))
    full = Subspace.full(L.field, L.n)
    members, ranks = [], []
    for i, F in enumerate(lat.subspaces):
        below = [z for z in node_ids if lat.leq(z, i)]
        acc = lat.bottom
        for z in below:
            acc = lat.sum_ids(acc, z)
        vee = L.join_all(lat[acc])
        above = [z for z in node_ids if lat.leq(i, z)]
        inter = lat.top
        for z in above:
            inter = lat.meet_ids(inter, z)
        wedge = L.meet_all(lat[inter]) if above else L.meet_all(full)
        if flat_test(L, F, (vee, wedge)):
            v = lat.id(vee)
            members.append(F)
            ranks.append(node_rank[v] + F.dim - vee.dim)
    return FamilyReport("flats", members, ranks)


def detect_uniform(L: CyclicFlatLattice) -> tuple[int, int] | None:
    """``(k, n)`` when the lattice is {0, E} with r(E) = k > 0, else ``None``."""
    if len(L) != 2:
        return None
    zero, full = L.nodes[L.bottom], L.nodes[L.top]
    if zero.dim != 0 or full.dim != L.n:
        return None
    k = L.ranks[L.top]
    if L.ranks[L.bottom] != 0 or not 0 < k <= L.n:
        return None
    return (k, L.n)


def dumps(L: CyclicFlatLattice) -> str:
    return json.dumps(L.to_json(), sort_keys=True)

from __future__ import annotations

import json

import pytest

from qmat import Subspace, cyclic_flats, detect_uniform, f_bounds, field, reconstruct_flats, span, uniform
from qmat.cycflats import CyclicFlatLattice, flat_test, hasse_edges, lattice_from_json
from qmat.errors import InvalidZLattice, NotALattice, NotANode
from qmat.samples import matroid_2x4, matroid_2x5, matroid_3x5

F2 = field(2)


def _labels(L):
    return [(s.label(), r) for s, r in L]


def test_2x4_lattice_and_bounds():
    L = cyclic_flats(matroid_2x4())
    top = span([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], F2)
    assert _labels(L) == [("<0>", 0), ("<e2, e3, e4>", 1)]
    assert L.bottom_node == Subspace.zero(F2, 4) and L.top_node == top
    e1 = span([[1, 0, 0, 0]], F2)
    B = span([[0, 1, 0, 0], [0, 0, 1, 0]], F2)
    assert f_bounds(L, e1) == (Subspace.zero(F2, 4), top)
    assert f_bounds(L, B) == (Subspace.zero(F2, 4), top)
    assert flat_test(L, e1) and not flat_test(L, B)


def test_3x5_lattice_shape():
    L = cyclic_flats(matroid_3x5())
    assert _labels(L) == [
        ("<0>", 0),
        ("<e1+e4+e5, e2+e4>", 1),
        ("<e1+e3, e4>", 1),
        ("<e1+e2+e4+e5, e3+e5>", 1),
        ("<e1+e5, e2, e3+e5, e4>", 2),
    ]
    assert L.hasse_edges == [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
    a1, a2 = L.nodes[1], L.nodes[2]
    assert L.join(a1, a2) == L.top_node
    assert L.meet(a1, a2) == L.bottom_node
    with pytest.raises(NotANode):
        L.rank_of(span([[1, 0, 0, 0, 0]], F2))


def test_dual_lattice_is_complements():
    M = matroid_3x5()
    LD = cyclic_flats(M.dual())
    assert sorted(LD.nodes) == sorted(F.ortho() for F in cyclic_flats(M).nodes)
    assert LD.rank_of(Subspace.full(F2, 5)) == 2


@pytest.mark.parametrize("make", [matroid_2x4, matroid_3x5, matroid_2x5])
def test_reconstruction_matches_definition(make):
    M = make()
    fl = reconstruct_flats(cyclic_flats(M))
    fam = M.family("flats")
    assert fl.members == fam.members and fl.ranks == fam.ranks


def test_reconstruction_over_f3():
    M = uniform(2, 3, field(3))
    fl = reconstruct_flats(cyclic_flats(M))
    assert fl.members == M.family("flats").members


def test_dot_export_is_exact():
    assert cyclic_flats(matroid_2x4()).to_dot() == (
        "digraph cyclic_flats {\n"
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        '  n0 [label="<0>\\nr = 0"];\n'
        '  n1 [label="<e2, e3, e4>\\nr = 1"];\n'
        "  n0 -> n1;\n"
        "}\n"
    )


def test_json_round_trip():
    L = cyclic_flats(matroid_3x5())
    L2 = lattice_from_json(json.loads(json.dumps(L.to_json())))
    assert L2.nodes == L.nodes and L2.ranks == L.ranks


def test_detect_uniform():
    F3 = field(3)
    assert detect_uniform(cyclic_flats(uniform(2, 4, F2))) == (2, 4)
    assert detect_uniform(cyclic_flats(uniform(1, 3, F3))) == (1, 3)
    assert detect_uniform(cyclic_flats(uniform(3, 3, F3))) is None
    assert detect_uniform(cyclic_flats(uniform(0, 3, F3))) is None
    assert detect_uniform(cyclic_flats(matroid_2x4())) is None


def test_not_a_lattice():
    a, b = span([[1, 0, 0]], F2), span([[0, 1, 0]], F2)
    with pytest.raises(NotALattice):
        CyclicFlatLattice([a, b], [0, 0])
    with pytest.raises(NotALattice):
        CyclicFlatLattice([], [])
    with pytest.raises(NotALattice):
        CyclicFlatLattice([a, a], [0, 0])


def test_invalid_lattice_rejected_by_reconstruction():
    L = CyclicFlatLattice([Subspace.zero(F2, 3), Subspace.full(F2, 3)], [1, 2])
    with pytest.raises(InvalidZLattice):
        reconstruct_flats(L)


def test_hasse_edges_is_a_transitive_reduction():
    F = field(2)
    chain = [Subspace.zero(F, 3), span([[1, 0, 0]], F), span([[1, 0, 0], [0, 1, 0]], F), Subspace.full(F, 3)]
    assert hasse_edges(chain) == [(0, 1), (1, 2), (2, 3)]

from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qmat import (
    Subspace,
    check_family_axioms,
    check_rank_axioms,
    check_Z_axioms,
    convolution_matroid,
    cyclic_flats,
    field,
    lattice,
    roundtrip_verify,
    span,
    uniform,
)
from qmat.crypto import MAX_VIOLATIONS
from qmat.cycflats import CyclicFlatLattice
from qmat.errors import AmbientMismatch, InvalidRange, InvalidZLattice
from qmat.qmatroid import QMatroid
from qmat.rmcode import random_code
from qmat.samples import matroid_2x4, matroid_3x5

F2 = field(2)


def _axioms(report):
    return sorted({v.axiom for v in report.violations})


def test_rank_axiom_violations_are_named():
    not_submodular = QMatroid(2, F2, lambda A: 0 if A.dim <= 1 else 2)
    assert _axioms(check_rank_axioms(not_submodular)) == ["R3"]
    not_monotone = QMatroid(2, F2, lambda A: [0, 1, 0][A.dim])
    assert _axioms(check_rank_axioms(not_monotone)) == ["R2"]
    too_big = QMatroid(4, F2, lambda A: 3 * A.dim)
    rep = check_rank_axioms(too_big)
    assert _axioms(rep) == ["R1"]
    first = rep.to_json()["violations"][0]
    assert first == {"axiom": "R1", "witness": [{"n": 4, "rows": [[0, 0, 0, 1]], "label": "<e4>"}],
                     "observed": {"rank": 3, "dim": 1}}


def test_violations_are_capped():
    rep = check_rank_axioms(QMatroid(5, F2, lambda A: 3 * A.dim))
    assert len(rep.violations) == MAX_VIOLATIONS and rep.truncated


def test_family_axioms_on_hand_built_families():
    lat = lattice(3, F2)
    e1 = span([[1, 0, 0]], F2)
    low = [s for s in lat.subspaces if s.dim <= 1]
    assert check_family_axioms(lat, "I", members=low).passed
    assert _axioms(check_family_axioms(lat, "I", members=[Subspace.full(F2, 3)])) == ["I2"]
    skewed = [s for s in low if s != e1] + [span([[1, 0, 0], [0, 1, 0]], F2)]
    assert "I3" in _axioms(check_family_axioms(lat, "I", members=skewed))
    opens = [s for s in lat.subspaces if s.dim != 1]
    assert check_family_axioms(lat, "O", members=opens).passed
    two_lines = [Subspace.zero(F2, 3), e1, span([[0, 1, 0]], F2)]
    assert _axioms(check_family_axioms(lat, "O", members=two_lines)) == ["O2"]
    with pytest.raises(InvalidRange):
        check_family_axioms(lat, "Q", members=low)
    with pytest.raises(InvalidRange):
        check_family_axioms(lat, "I")


def test_z_axiom_violations():
    full, zero = Subspace.full(F2, 3), Subspace.zero(F2, 3)
    assert _axioms(check_Z_axioms(CyclicFlatLattice([zero, full], [1, 2]))) == ["Z1"]
    assert "Z2" in _axioms(check_Z_axioms(CyclicFlatLattice([zero, full], [0, 3])))
    line = span([[1, 0, 0]], F2)
    assert _axioms(check_Z_axioms(CyclicFlatLattice([zero, line, full], [0, 0, 1]))) == ["Z2"]


def test_convolution_errors():
    L = cyclic_flats(matroid_2x4())
    with pytest.raises(AmbientMismatch):
        convolution_matroid(5, F2, L)
    bad = CyclicFlatLattice([Subspace.zero(F2, 3), Subspace.full(F2, 3)], [1, 2])
    with pytest.raises(InvalidZLattice):
        convolution_matroid(3, F2, bad)


def test_round_trip_on_samples():
    for M in (matroid_2x4(), matroid_3x5(), uniform(2, 4, F2)):
        rep = roundtrip_verify(M)
        assert rep.passed and rep.ranks_equal and rep.nodes_equal and rep.first_divergence is None


def test_convolution_from_pairs_equals_lattice_input():
    M = matroid_3x5()
    L = cyclic_flats(M)
    MZ = convolution_matroid(5, F2, list(L))
    assert np.array_equal(MZ.ranks, M.ranks)
    assert MZ.rank(M.E) == 3


def test_report_json_is_stable():
    rep = check_Z_axioms(cyclic_flats(matroid_3x5()))
    assert rep.passed
    assert json.loads(rep.dumps()) == rep.to_json()
    assert rep.dumps() == check_Z_axioms(cyclic_flats(matroid_3x5())).dumps()


SHAPES = [(2, 2, 2, 4), (2, 3, 2, 4), (2, 2, 3, 5), (3, 2, 2, 4), (2, 3, 2, 5), (3, 3, 2, 4)]


@settings(max_examples=12, deadline=None)
@given(st.sampled_from(SHAPES), st.integers(0, 2**32 - 1))
def test_random_code_matroids_satisfy_every_scheme(shape, seed):
    q, m, k, n = shape
    M = random_code(q, m, k, n, np.random.default_rng(seed)).matroid()
    assert check_rank_axioms(M).passed
    assert check_family_axioms(M, "I").passed
    assert check_family_axioms(M, "O").passed
    assert check_Z_axioms(cyclic_flats(M)).passed
    assert roundtrip_verify(M).passed

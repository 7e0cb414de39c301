from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracle import PolyField, code_rank_function, gamma_support, rref_key
from qmat import Subspace, dual_code, field, minimal_codewords, new_code, span, support
from qmat.errors import DegenerateCode, DependentBasis, FieldMismatch
from qmat.linalg import matmul, transpose
from qmat.rmcode import (
    bridge_checks,
    code_from_json,
    code_of_space,
    code_rank,
    distinct_supports,
    fqm_independent,
    matroid_of_dual,
    random_code,
)
from qmat.samples import f2, f8, generator_2x4, generator_3x5

F2 = f2()
F8_REF = PolyField(2, (1, 1, 0, 1))
A = 2  # the modulus root alpha of F_8 as an element int
OTHER_BASIS = [3, 5, 7]  # alpha^3, alpha^6, alpha^5: coordinates (1,1,0), (1,0,1), (1,1,1)


def code_c():
    return new_code(generator_3x5(), f8(), F2)


def test_parameters():
    C = code_c()
    assert C.params == "[5,3]_{8/2}" and C.nondegenerate
    D = dual_code(C)
    assert D.params == "[5,2]_{8/2}"
    assert all(x == 0 for row in matmul(C.G, transpose(D.G), f8()) for x in row)


def test_support_of_a_word():
    S, w = support((A, 1, 0, 0, 0), f8())
    assert S == span([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]], F2) and w == 2
    with pytest.raises(FieldMismatch):
        support((8, 0), f8())


def test_other_basis_elements():
    F = f8()
    assert OTHER_BASIS == [F.pow(A, 3), F.pow(A, 6), F.pow(A, 5)]
    with pytest.raises(DependentBasis):
        support((1, A), F, [1, A, F.add(1, A)])


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 7), min_size=5, max_size=5), st.integers(1, 7))
def test_support_is_basis_and_scalar_invariant(v, c):
    F = f8()
    S, w = support(v, F)
    assert support(v, F, OTHER_BASIS)[0] == S
    assert support([F.mul(c, x) for x in v], F)[0] == S
    assert w == S.dim <= 3
    assert S.rows == rref_key(gamma_support(F8_REF, v, 5), 2, 5)


def test_code_rank_identities_on_both_codes():
    for G in (generator_2x4(), generator_3x5()):
        C = new_code(G, f8(), F2)
        M = C.matroid()
        ref = code_rank_function(F8_REF, G)
        for U in M.lattice.subspaces:
            r = M.rank(U)
            assert r == C.k - code_of_space(C, U).dim == code_rank(C, U)
            assert r == ref(frozenset(_vectors(U)))


def _vectors(U):
    return [tuple(v) for v in U.vectors()]


def test_dual_code_matroid_is_dual_matroid():
    C = code_c()
    assert dual_code(C).matroid().same_ranks(matroid_of_dual(C))
    C24 = new_code(generator_2x4(), f8(), F2)
    assert dual_code(C24).matroid().same_ranks(C24.matroid().dual())


def test_dual_code_supports_are_the_circuits():
    C = code_c()
    M = C.matroid()
    sup = distinct_supports(dual_code(C))
    assert len(sup) == 9 and sup.words == 9
    assert sorted(sup.supports()) == sorted(M.family("circuits").members)
    assert minimal_codewords(dual_code(C)).words == 9


def test_minimal_codeword_count_matches_bruteforce():
    # 73 projective classes, 64 distinct nonzero supports, 61 minimal classes:
    # all frozen from the oracle's independent enumeration of the 512 words.
    C = code_c()
    assert sum(1 for _ in C.projective_words()) == 73
    assert len(distinct_supports(C)) == 64
    assert minimal_codewords(C).words == 61


def test_bridge_checks_pass():
    for G in (generator_2x4(), generator_3x5()):
        rep = bridge_checks(new_code(G, f8(), F2))
        assert rep.passed, rep.details


def test_fqm_independence_matches_matroid_independence():
    C = new_code(generator_2x4(), f8(), F2)
    M = C.matroid()
    for U in M.lattice.subspaces:
        assert fqm_independent(C, U) == M.classify(U).independent
    assert not fqm_independent(C, span([[0, 1, 0, 0], [0, 0, 1, 0]], F2))
    assert fqm_independent(C, span([[1, 0, 0, 0], [0, 1, 0, 0]], F2))


def test_degenerate_codes():
    C = new_code([[1, 1, 0]], f8(), F2)
    assert not C.nondegenerate
    with pytest.raises(DegenerateCode):
        fqm_independent(C, Subspace.zero(F2, 3))
    with pytest.raises(DegenerateCode):
        random_code(2, 2, 2, 5, np.random.default_rng(0))


def test_random_code_is_reproducible():
    a = random_code(3, 2, 2, 4, np.random.default_rng(7))
    b = random_code(3, 2, 2, 4, np.random.default_rng(7))
    assert a.G == b.G and a.nondegenerate and a.params == "[4,2]_{9/3}"


def test_json_round_trip():
    C = code_c()
    C2 = code_from_json(json.loads(json.dumps(C.to_json())))
    assert C2.G == C.G and C2.ext == C.ext
    assert field(2, 3) == C2.ext

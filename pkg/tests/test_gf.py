from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from oracle import PolyField
from qmat import field
from qmat.errors import DegreeMismatch, DivisionByZero, NonPrime, ReducibleModulus
from qmat.gf import expand_over_base, first_irreducible, is_irreducible, recombine

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4)]


@pytest.mark.parametrize("p,e", FIELDS)
def test_tables_agree_with_polynomial_arithmetic(p, e):
    F = field(p, e)
    ref = PolyField(p, F.modulus or (0, 1))
    for a in range(F.q):
        for b in range(F.q):
            assert F.mul(a, b) == ref.mul(a, b)
            assert F.add(a, b) == ref.add(a, b)


def test_default_modulus_of_f8_gives_alpha_cubed():
    F = field(2, 3)
    a = F.alpha
    assert F.pow(a, 3) == F.add(a, 1)
    assert F.pow(a, 7) == 1


def test_fallback_modulus_is_irreducible():
    mod = first_irreducible(3, 2)
    assert mod == (1, 0, 1)
    assert is_irreducible(mod, 3)
    assert field(3, 2).modulus == mod


def test_construction_errors():
    with pytest.raises(NonPrime):
        field(4)
    with pytest.raises(ReducibleModulus):
        field(2, 2, [1, 0, 1])
    with pytest.raises(DegreeMismatch):
        field(2, 3, [1, 1, 1])
    with pytest.raises(DivisionByZero):
        field(2, 3).inv(0)


def test_fields_are_cached_and_compare_by_modulus():
    assert field(2, 3) is field(2, 3)
    assert field(2, 3) != field(2, 3, [1, 0, 1, 1])


elems27 = st.integers(0, 26)


@given(elems27, elems27, elems27)
def test_field_axioms_gf27(a, b, c):
    F = field(3, 3)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1


@given(st.lists(st.integers(0, 7), min_size=1, max_size=6))
def test_expansion_round_trip(v):
    F = field(2, 3)
    M = expand_over_base(v, F)
    assert recombine(M, F) == v
    basis = [F.pow(F.alpha, 3), F.pow(F.alpha, 6), F.pow(F.alpha, 5)]
    assert recombine(expand_over_base(v, F, basis), F, basis) == v

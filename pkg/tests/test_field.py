import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from iacgroups.errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NotPrime,
    OrderDoesNotDivide,
    ReducibleModulus,
)
from iacgroups.field import Field, element_of_order, field_arith, field_make, field_of_order

from oracles import PolyField, monic_irreducibles

FIELDS = [(3, 1), (7, 1), (3, 2), (5, 2), (3, 3), (7, 2)]


def test_prime_field():
    F = field_make(3, 1)
    assert F.q == 3 and F.modulus is None


def test_f9_modulus_is_least_irreducible():
    assert field_make(3, 2).modulus == (1, 0, 1)


@pytest.mark.parametrize("p,k", [(3, 2), (3, 3), (5, 2), (7, 2), (3, 4)])
def test_default_modulus_matches_oracle(p, k):
    assert field_make(p, k).modulus == monic_irreducibles(p, k)[0]


def test_not_prime():
    with pytest.raises(NotPrime):
        field_make(9, 1)


def test_even_characteristic():
    with pytest.raises(EvenCharacteristic):
        field_make(2, 3)


def test_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        field_make(3, 2, (2, 0, 1))  # x^2 - 1


def test_scalar_examples():
    F7, F11 = field_make(7), field_make(11)
    assert field_arith("inv", F7(3)) == F7(5)
    assert field_arith("pow", F11(2), -1) == F11(6)
    F9 = field_make(3, 2)
    assert field_arith("mul", F9.gen, F9.gen) == F9(2)


def test_division_by_zero():
    F = field_make(5)
    with pytest.raises(DivisionByZero):
        F(0).inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        field_make(3)(1) + field_make(5)(1)


def test_element_of_order():
    assert element_of_order(field_make(11), 5) == field_make(11)(3)
    assert element_of_order(field_make(11), 1) == field_make(11)(1)
    with pytest.raises(OrderDoesNotDivide):
        element_of_order(field_make(7), 5)


def test_field_of_order():
    assert field_of_order(9).key == field_make(3, 2).key
    assert field_of_order(13).q == 13


def test_fields_are_cached_and_equal():
    assert field_make(5, 2) is field_make(5, 2)
    assert Field(5, 2) == field_make(5, 2)


@pytest.mark.parametrize("p,k", FIELDS)
def test_tables_match_polynomial_oracle(p, k):
    F = field_make(p, k)
    O = PolyField(p, F.modulus)
    q = F.q
    a, b = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    mul = F.mul(a, b)
    add = F.add(a, b)
    for x in range(q):
        for y in range(q):
            ex, ey = O.from_code(x), O.from_code(y)
            assert mul[x, y] == O.code(O.mul(ex, ey))
            assert add[x, y] == O.code(O.add(ex, ey))


@pytest.mark.parametrize("p,k", FIELDS)
def test_inverse_table(p, k):
    F = field_make(p, k)
    nz = np.arange(1, F.q)
    assert np.all(F.mul(nz, F.inv(nz)) == 1)


@pytest.mark.parametrize("p,k", FIELDS)
def test_primitive_element_generates(p, k):
    F = field_make(p, k)
    assert len(set(F.exp_table.tolist())) == F.q - 1


def test_matmul_extension_field():
    F = field_make(3, 2)
    rng = np.random.default_rng(1)
    A = rng.integers(0, 9, (3, 4))
    B = rng.integers(0, 9, (4, 2))
    C = F.matmul(A, B)
    for i in range(3):
        for j in range(2):
            acc = 0
            for t in range(4):
                acc = F.add(acc, F.mul(A[i, t], B[t, j]))
            assert C[i, j] == acc


def test_embed_reduces_integers():
    F = field_make(3, 2)
    assert F.embed([-1, 4]).tolist() == [2, 1]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_scalar_field_axioms(pk, data):
    F = field_make(*pk)
    a, b, c = (F.from_code(data.draw(st.integers(0, F.q - 1))) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == F.zero
    if a:
        assert a * a.inverse() == F.one
        assert a ** (F.q - 1) == F.one

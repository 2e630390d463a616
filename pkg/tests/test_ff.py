import pytest
from hypothesis import given, strategies as st

from drinfeld2 import (
    AUTO,
    ExtensionField,
    FieldError,
    IncompatibleFieldError,
    PrimeField,
    ext_make,
    field_make,
)
from drinfeld2.ff import check_same_field, least_irreducible


def test_prime_field_matches_integer_arithmetic():
    F = PrimeField(7)
    for a in range(7):
        for b in range(7):
            assert F.add(a, b) == (a + b) % 7
            assert F.mul(a, b) == (a * b) % 7
            assert F.sub(a, b) == (a - b) % 7
        assert F.neg(a) == (-a) % 7


def test_characteristic_two_rejected():
    with pytest.raises(FieldError):
        PrimeField(2)
    with pytest.raises(FieldError):
        field_make(2, 3)


def test_composite_characteristic_rejected():
    with pytest.raises(FieldError):
        PrimeField(9)


def test_auto_modulus_is_least_irreducible():
    base = PrimeField(3)
    assert least_irreducible(base, 1) == (0, 1)
    assert least_irreducible(base, 2) == (1, 0, 1)
    ext = ext_make(base, 2)
    assert ext.modulus == (1, 0, 1)


def test_reducible_modulus_rejected():
    base = PrimeField(3)
    # y^2 - 1 = (y-1)(y+1)
    with pytest.raises(FieldError):
        ExtensionField(base, 2, modulus=(2, 0, 1))


def test_extension_generator_cube_is_frobenius():
    # y^3 by square-and-multiply must agree with the Frobenius table
    base = PrimeField(3)
    ext = ext_make(base, 2)
    y = ext.from_coords((0, 1))
    assert ext.pow(y, 3) == ext.frobenius(y)


@pytest.mark.parametrize("p,s", [(3, 2), (5, 2), (3, 3)])
def test_field_axioms_exhaustive(p, s):
    F = field_make(p, s)
    elems = list(F.elements())
    one = F.one
    for a in elems:
        assert F.add(a, F.neg(a)) == 0
        if a != 0:
            assert F.mul(a, F.inv(a)) == one
    # spot-check associativity and distributivity on a grid
    sample = elems[:: max(1, len(elems) // 7)]
    for a in sample:
        for b in sample:
            for c in sample:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_table_mul_matches_polynomial_mul():
    ext = ext_make(PrimeField(3), 2)
    for a in ext.elements():
        for b in ext.elements():
            assert ext.mul(a, b) == ext._mul_poly(a, b)


def test_frobenius_is_additive_and_periodic():
    ext = ext_make(PrimeField(5), 2)
    for a in ext.elements():
        assert ext.frob_iter(a, 2) == a
        assert ext.frob_iter(a, 1) == ext.pow(a, 5)
        for b in ext.elements():
            assert ext.frobenius(ext.add(a, b)) == ext.add(
                ext.frobenius(a), ext.frobenius(b)
            )


def test_coords_roundtrip():
    ext = ext_make(PrimeField(3), 2)
    for a in ext.elements():
        assert ext.from_coords(ext.coords(a)) == a
        assert ext.from_str(ext.to_str(a)) == a


def test_embed_is_identity_on_base_codes():
    ext = ext_make(PrimeField(5), 2)
    for a in range(5):
        assert ext.embed(a) == a
        assert ext.coords(a) == (a, 0)


def test_square_unit_count():
    for p, s in [(3, 1), (5, 1), (3, 2)]:
        F = field_make(p, s)
        squares = [u for u in F.units() if F.is_square_unit(u)]
        assert len(squares) == (F.order - 1) // 2


def test_pth_root_inverts_p_power():
    F = field_make(3, 2)
    for a in F.elements():
        assert F.pth_root(F.pow(a, 3)) == a


def test_from_str_rejects_bad_digits():
    F = field_make(3, 1)
    with pytest.raises(FieldError):
        F.from_str("5")
    with pytest.raises(FieldError):
        F.from_str("x")
    ext = ext_make(F, 2)
    with pytest.raises(FieldError):
        ext.from_str("1,1,1")


def test_field_identity_checks():
    F3 = field_make(3, 1)
    F5 = field_make(5, 1)
    assert F3 == field_make(3, 1)
    assert F3 != F5
    with pytest.raises(IncompatibleFieldError):
        check_same_field(F3, F5)


@given(st.integers(min_value=0, max_value=24), st.integers(min_value=0, max_value=24))
def test_mul_commutes_f25(a, b):
    ext = ext_make(PrimeField(5), 2)
    assert ext.mul(a, b) == ext.mul(b, a)


@given(st.integers(min_value=1, max_value=24), st.integers(min_value=-6, max_value=6))
def test_pow_laws_f25(a, e):
    ext = ext_make(PrimeField(5), 2)
    assert ext.mul(ext.pow(a, e), ext.pow(a, 1 - e)) == a

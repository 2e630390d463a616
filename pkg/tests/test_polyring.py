import itertools
import random

import pytest
from hypothesis import given, strategies as st

from drinfeld2 import (
    Poly,
    PolyDomainError,
    count_monic_irreducibles,
    ext_make,
    field_make,
    gcd,
    is_irreducible,
    least_irreducible_poly,
    monic_irreducibles,
    poly_from_human,
    poly_from_machine,
    poly_from_str,
    squarefree_decomposition,
    squarefree_split,
)

F3 = field_make(3, 1)
F5 = field_make(5, 1)
F9 = field_make(3, 2)


def rand_poly(field, max_deg, rng):
    return Poly(field, [rng.randrange(field.order) for _ in range(max_deg + 1)])


def test_schoolbook_product_oracle():
    T = Poly.x(F3)
    one = Poly.one(F3)
    two = Poly.constant(F3, 2)
    assert (T + one) * (T + two) == Poly(F3, (2, 0, 1))  # T^2 + 2


def test_divmod_reconstruction_random():
    rng = random.Random(7)
    for _ in range(300):
        a = rand_poly(F5, rng.randrange(6), rng)
        b = rand_poly(F5, rng.randrange(4), rng)
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.deg < b.deg


@given(
    st.lists(st.integers(min_value=0, max_value=2), min_size=0, max_size=6),
    st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=4),
)
def test_divmod_reconstruction_f3(ac, bc):
    a = Poly(F3, ac)
    b = Poly(F3, bc)
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a


def test_gcd_divides_and_is_monic():
    rng = random.Random(11)
    for _ in range(200):
        a = rand_poly(F3, rng.randrange(5), rng)
        b = rand_poly(F3, rng.randrange(5), rng)
        if a.is_zero() and b.is_zero():
            continue
        g = gcd(a, b)
        if g.is_zero():
            assert a.is_zero() and b.is_zero()
            continue
        assert g.lc() == F3.one
        assert g.divides(a) and g.divides(b)


def _has_factor(f):
    """Exhaustive trial division by monic polynomials of lower degree."""
    field = f.field
    d = len(f.coeffs) - 1
    for k in range(1, d):
        for tail in itertools.product(range(field.order), repeat=k):
            cand = Poly(field, list(tail) + [field.one])
            if cand.divides(f):
                return True
    return False


@pytest.mark.parametrize("field,max_deg", [(F3, 4), (F5, 3)])
def test_irreducibility_against_trial_division(field, max_deg):
    for d in range(1, max_deg + 1):
        for tail in itertools.product(range(field.order), repeat=d):
            f = Poly(field, list(tail) + [field.one])
            assert is_irreducible(f) == (not _has_factor(f))


def test_irreducibility_rejects_constants():
    with pytest.raises(PolyDomainError):
        is_irreducible(Poly.one(F3))


def test_irreducible_counts_match_necklace_formula():
    for field in (F3, F5):
        for d in (1, 2, 3):
            found = sum(1 for _ in monic_irreducibles(field, d))
            assert found == count_monic_irreducibles(field.order, d)


def test_least_irreducible_poly():
    assert least_irreducible_poly(F3, 1) == Poly.x(F3)
    assert least_irreducible_poly(F3, 2) == Poly(F3, (1, 0, 1))


def test_squarefree_decomposition_reconstructs():
    rng = random.Random(23)
    for _ in range(150):
        f = rand_poly(F3, 1 + rng.randrange(7), rng)
        if f.is_zero() or f.is_constant():
            continue
        parts = squarefree_decomposition(f)
        prod = Poly.one(F3)
        for mult, fac in parts.items():
            prod = prod * fac**mult
        assert prod == f.monic()


def test_squarefree_decomposition_pth_power():
    # (T + 1)^3 has zero derivative over F_3
    f = (Poly.x(F3) + Poly.one(F3)) ** 3
    parts = squarefree_decomposition(f)
    assert parts == {3: Poly.x(F3) + Poly.one(F3)}


def test_squarefree_split_exact():
    rng = random.Random(29)
    for _ in range(150):
        f = rand_poly(F5, 1 + rng.randrange(6), rng)
        if f.is_zero():
            continue
        g, w = squarefree_split(f)
        assert g * g * w == f
        assert g.is_zero() or g.lc() == F5.one
        # w is squarefree: no repeated factor in its decomposition
        if not w.is_constant():
            assert all(m == 1 for m in squarefree_decomposition(w))


def test_parse_human_and_machine_agree():
    for text_h, text_m in [("T^2+2*T+1", "1,2,1"), ("T", "0,1"), ("2", "2")]:
        assert poly_from_human(F3, text_h) == poly_from_machine(F3, text_m)
        assert poly_from_str(F3, text_h) == poly_from_str(F3, text_m)


def test_parse_signs_and_spaces():
    assert poly_from_human(F3, " T^2 - T + 1 ") == Poly(F3, (1, 2, 1))
    assert poly_from_human(F3, "-T") == Poly(F3, (0, 2))


def test_machine_form_uses_semicolons_over_nonprime_fields():
    f = Poly(F9, (F9.from_str("2,1"), F9.one))
    text = f.to_machine()
    assert ";" in text
    assert poly_from_machine(F9, text) == f


def test_machine_roundtrip_prime_field():
    rng = random.Random(31)
    for _ in range(50):
        f = rand_poly(F3, rng.randrange(5), rng)
        if f.is_zero():
            continue
        assert poly_from_machine(F3, f.to_machine()) == f
        assert poly_from_str(F3, f.to_human()) == f


def test_eval_in_extension_finds_root():
    ext = ext_make(F3, 2)
    P = Poly(F3, (1, 0, 1))  # T^2 + 1, the defining modulus
    y = ext.from_coords((0, 1))
    assert P.eval(y, field=ext) == ext.zero
    assert P.eval(1) == F3.add(1, 1)


def test_monic_and_edge_cases():
    f = Poly(F5, (2, 4))
    assert f.monic().lc() == F5.one
    with pytest.raises(PolyDomainError):
        Poly.zero(F5).monic()
    with pytest.raises(PolyDomainError):
        Poly.zero(F5).lc()
    assert Poly(F5, (0, 0, 0)).is_zero()


def test_deriv():
    f = Poly(F3, (1, 2, 0, 1))  # 1 + 2T + T^3
    assert f.deriv() == Poly(F3, (2,))  # 3T^2 vanishes

import json

import pytest

from drinfeld2 import (
    DrinfeldModule,
    EndRingKind,
    Poly,
    PolyDomainError,
    Verdict,
    all_modules,
    charpoly,
    classify,
    endomorphism_order,
    ext_make,
    field_make,
    supersingular,
    weil_admissible,
)

F3 = field_make(3, 1)
EXT1 = ext_make(F3, 1)
EXT9 = ext_make(F3, 2)
T = Poly.x(F3)


def test_tri_criterion_agrees_exhaustively():
    for ext in (EXT1, EXT9):
        for dm in all_modules(ext):
            ss, witness = supersingular(dm)  # raises ConsistencyError on a clash
            assert ss == (witness["height"] == 2)


def test_supersingular_examples():
    assert supersingular(DrinfeldModule(EXT1, 0, 0, 1))[0] is True
    assert supersingular(DrinfeldModule(EXT1, 0, 1, 1))[0] is False


def test_weil_admissible_preconditions():
    with pytest.raises(PolyDomainError):
        weil_admissible(Poly.zero(F3), 0, T, 1)  # mu not a unit
    with pytest.raises(PolyDomainError):
        weil_admissible(Poly.zero(F3), 1, T * T, 1)  # P reducible
    with pytest.raises(PolyDomainError):
        weil_admissible(Poly.zero(F3), 1, T, 0)  # m < 1
    with pytest.raises(PolyDomainError):
        weil_admissible(Poly(F3, (0, 1)), 1, T, 1)  # deg c over the bound


def test_admissibility_table_for_q3_P_T_m1():
    # hand-checkable: ordinary (c, mu) in {1,2} x {1,2}; supersingular (0, mu)
    verdicts = {}
    for c0 in range(3):
        for mu in (1, 2):
            verdicts[(c0, mu)] = weil_admissible(Poly.constant(F3, c0), mu, T, 1)
    assert verdicts[(0, 1)] is Verdict.SUPERSINGULAR_2
    assert verdicts[(0, 2)] is Verdict.SUPERSINGULAR_2
    for c0 in (1, 2):
        for mu in (1, 2):
            assert verdicts[(c0, mu)] is Verdict.ORDINARY


def test_admissibility_matches_realization_over_f9():
    # every charpoly realized by an actual module must be admissible
    realized = set()
    for dm in all_modules(EXT9):
        cp = charpoly(dm)
        realized.add((cp.c, cp.mu, cp.P, cp.m))
    for c, mu, P, m in realized:
        assert weil_admissible(c, mu, P, m).is_admissible()


def test_verdict_helpers():
    assert Verdict.ORDINARY.is_admissible()
    assert not Verdict.ORDINARY.is_supersingular()
    assert Verdict.SUPERSINGULAR_4.is_supersingular()
    assert not Verdict.NOT_ADMISSIBLE.is_admissible()


def test_endomorphism_order_frozen_example():
    cp = charpoly(DrinfeldModule(EXT1, 0, 1, 1))
    kind, g, omega, conductors, flagged = endomorphism_order(cp)
    assert kind is EndRingKind.MAXIMAL_ORDER
    assert g.is_one()
    assert omega == Poly(F3, (1, 1))
    assert conductors == [Poly.one(F3)]
    assert flagged == []


def test_endomorphism_order_quaternionic():
    cp = charpoly(DrinfeldModule(EXT9, 0, 0, 1))
    kind, g, omega, conductors, flagged = endomorphism_order(cp)
    assert kind is EndRingKind.QUATERNIONIC_CASE
    assert g is None and omega is None
    assert conductors == [] and flagged == []


def test_endomorphism_order_reconstruction_everywhere():
    seen = set()
    for dm in all_modules(EXT9):
        cp = charpoly(dm)
        key = (cp.c, cp.mu)
        if key in seen:
            continue
        seen.add(key)
        kind, g, omega, conductors, flagged = endomorphism_order(cp)
        if kind is EndRingKind.QUATERNIONIC_CASE:
            assert cp.discriminant().is_zero()
            continue
        assert g * g * omega == cp.discriminant()
        assert all(f.divides(g) for f in conductors)
        for f in flagged:
            assert cp.P.divides(f)
        if g.is_one():
            assert kind is EndRingKind.MAXIMAL_ORDER


def test_classification_report_json_serializes():
    report = classify(DrinfeldModule(EXT1, 0, 1, 1))
    text = json.dumps(report.to_json())
    data = json.loads(text)
    assert data["is_supersingular"] is False
    assert data["end_ring_kind"] == "MAXIMAL_ORDER"
    assert data["disc"] == "T+1"
    assert data["chi"] == "T+1"

    report2 = classify(DrinfeldModule(EXT9, 0, 0, 1))
    data2 = json.loads(json.dumps(report2.to_json()))
    assert data2["is_supersingular"] is True
    assert data2["end_ring_kind"] == "QUATERNIONIC_CASE"
    assert data2["conductor_g"] is None

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wahlkit.pic import (
    anticanonical_half,
    adjunction_genus,
    blow_up,
    blow_up_along,
    coordinates,
    double_cover_pullback,
    h0_hirzebruch,
    hirzebruch,
    horikawa_case_iii_valid,
    intersect,
    projective_plane,
    proper_transform,
    pullback,
    riemann_roch_chi,
)

def test_hirzebruch_canonical_and_delta():
    F2 = hirzebruch(2)
    delta = F2.divisor(D0=1, G=2)
    assert F2.K == F2.divisor(D0=-2, G=-4)
    assert F2.K == -2 * delta
    assert delta * delta == 2
    F0 = hirzebruch(0)
    assert F0.divisor(D0=1, G=1) * F0.divisor(D0=1, G=1) == 2
    assert anticanonical_half(F0) == F0.divisor(D0=1, G=1)
    assert anticanonical_half(F2) == delta
    with pytest.raises(ValueError):
        anticanonical_half(hirzebruch(1))

def test_blowup_canonical_f2():
    F2 = hirzebruch(2)
    Z = blow_up(blow_up(F2, "E1"), "E2")
    Dt = proper_transform(Z, F2.basis_class("G"), {"E1": 1, "E2": 1})
    basis = [Z.basis_class("D0"), Dt, Z.basis_class("E1"), Z.basis_class("E2")]
    assert coordinates(Z.K, basis) == [-2, -4, -3, -3]
    assert Dt * Dt == -2
    assert Z.K * Z.basis_class("D0") == 0

def test_blowup_canonical_f0_and_p2():
    F0 = hirzebruch(0)
    Z = blow_up(blow_up(F0, "E1"), "E2")
    # F0 in (G1, G2) coordinates: G1 = D0, G2 = G
    assert Z.K == Z.divisor(D0=-2, G=-2, E1=1, E2=1)
    P = projective_plane()
    assert P.K * P.K == 9
    P1 = blow_up(P, "E")
    assert P1.K * P1.K == 8

def test_blowup_duplicate_label():
    Z = blow_up(hirzebruch(0), "E1")
    with pytest.raises(ValueError):
        blow_up(Z, "E1")

def test_proper_transform_branch_curve():
    F2 = hirzebruch(2)
    Z = blow_up(blow_up(F2, "E1"), "E2")
    B = F2.divisor(D0=6, G=12)
    Bt = proper_transform(Z, B, {"E1": 2, "E2": 2})
    assert Bt == pullback(Z, B) - 2 * Z.basis_class("E1") - 2 * Z.basis_class("E2")
    assert Bt * Bt == 64
    assert proper_transform(Z, B, {}) * proper_transform(Z, B, {}) == B * B
    with pytest.raises(KeyError):
        proper_transform(Z, B, {"D0": 1})

def test_intersect_examples():
    F2 = hirzebruch(2)
    delta = F2.divisor(D0=1, G=2)
    assert intersect(F2, 6 * delta, delta) == 12
    assert intersect(F2, 6 * delta, F2.basis_class("G")) == 6
    assert intersect(F2, F2.K, F2.basis_class("D0")) == 0
    with pytest.raises(ValueError):
        intersect(F2, delta, hirzebruch(0).basis_class("G"))

def test_adjunction_examples():
    F0 = hirzebruch(0)
    assert adjunction_genus(F0, F0.divisor(D0=1, G=1)) == 0
    H = projective_plane().basis_class("H")
    # cubic through 8 points: D^2 = 1, K.D = -1, p_a = 1
    Z = projective_plane()
    labels = [f"E{i}" for i in range(1, 9)]
    for lab in labels:
        Z = blow_up(Z, lab)
    C = proper_transform(Z, 3 * H, {lab: 1 for lab in labels})
    assert (C * C, Z.K * C) == (1, -1)
    assert adjunction_genus(Z, C) == 1
    # (-5)-curve: conic through 9 general points on P2 blown up 9 times
    Z9 = blow_up(Z, "E9")
    C5 = proper_transform(Z9, 2 * H, {f"E{i}": 1 for i in range(1, 10)})
    assert (C5 * C5, Z9.K * C5) == (-5, 3)
    assert adjunction_genus(Z9, C5) == 0

@pytest.mark.parametrize("d", [0, 2])
def test_riemann_roch_examples(d):
    F = hirzebruch(d)
    delta = anticanonical_half(F)
    assert riemann_roch_chi(F, F.zero()) == 1
    assert riemann_roch_chi(F, 6 * delta) == 49
    assert riemann_roch_chi(F, 5 * delta) == 36
    assert riemann_roch_chi(F, delta) == 4
    assert riemann_roch_chi(F, F.basis_class("G")) == 2

def test_h0_examples():
    assert h0_hirzebruch(0, 1, 1) == 4
    assert h0_hirzebruch(2, 1, 2) == 4
    assert h0_hirzebruch(0, 0, 1) == 2
    assert h0_hirzebruch(0, 6, 6) == 49
    assert h0_hirzebruch(2, 5, 10) == 36
    with pytest.raises(ValueError):
        h0_hirzebruch(0, -1, 3)

def test_double_cover_examples():
    F0 = hirzebruch(0)
    delta = anticanonical_half(F0)
    rule, kd = double_cover_pullback(F0, F0.basis_class("G"), 3 * delta)
    assert kd == 2
    assert rule.k_base == delta

    P = projective_plane()
    rule = double_cover_pullback(P, None, 4 * P.basis_class("H"))
    assert rule.k_base == P.basis_class("H")
    assert rule.k_squared() == 2

    for d in range(0, 5):
        for p_g in range(0, 16):
            if not horikawa_case_iii_valid(p_g, d):
                continue
            F = hirzebruch(d)
            L = F.divisor(D0=3, G=(p_g + 3 * d + 2) // 2)
            rule = double_cover_pullback(F, None, L)
            assert rule.k_base == F.divisor(D0=1, G=(p_g + d - 2) // 2)
            # these covers sit on the Noether line
            assert rule.k_squared() == 2 * p_g - 4

def test_horikawa_predicate():
    assert horikawa_case_iii_valid(4, 0)
    assert not horikawa_case_iii_valid(5, 0)
    assert not horikawa_case_iii_valid(4, 2)
    assert horikawa_case_iii_valid(6, 2)

def test_d_in_b_self_intersection():
    for d in (0, 2):
        F = hirzebruch(d)
        D = anticanonical_half(F)
        _, Dt, _ = blow_up_along(F, D, [1] * 10)
        assert Dt * Dt == -8
        _, Dt, _ = blow_up_along(F, D, [2, 3, 1, 4])
        assert Dt * Dt == -8

def _partitions(total, largest=None):
    largest = total if largest is None else largest
    if total == 0:
        yield []
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield [first] + rest

def test_even_case_minus_four():
    for d in (0, 2):
        F = hirzebruch(d)
        D = anticanonical_half(F)
        B = 6 * D
        for s in range(0, 7):
            for seps in _partitions(s):
                Z, Dt, labels = blow_up_along(F, D, seps)
                Bp = proper_transform(Z, B, {lab: 2 for lab in labels})
                twice = 2 * (Dt * Dt) - Bp * Dt
                assert twice % 2 == 0 and twice // 2 == -4

# ---- properties ----------------------------------------------------------

classes = st.tuples(st.integers(-20, 20), st.integers(-20, 20))

@given(st.integers(0, 6), classes, classes)
def test_blowup_preserves_intersections(d, a, b):
    F = hirzebruch(d)
    A, B = F.divisor(a), F.divisor(b)
    Z = blow_up(F, "E")
    E = Z.basis_class("E")
    assert pullback(Z, A) * pullback(Z, B) == A * B
    assert pullback(Z, A) * E == 0 and E * E == -1
    assert A * B == B * A

@given(st.integers(0, 6), st.integers(0, 8), st.integers(0, 40))
def test_h0_equals_chi_when_nef(d, a, extra):
    b = a * d + extra
    F = hirzebruch(d)
    assert h0_hirzebruch(d, a, b) == riemann_roch_chi(F, F.divisor(D0=a, G=b))

@given(st.integers(0, 10))
def test_rational_fibres_and_sections(d):
    F = hirzebruch(d)
    assert adjunction_genus(F, F.basis_class("G")) == 0
    assert adjunction_genus(F, F.basis_class("D0")) == 0

from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wahlkit.qsing import (
    NumericalInvariants,
    TString,
    classify,
    describe,
    discrepancies,
    enumerate_wahl,
    generate_children,
    hj_eval,
    hj_expand,
    length_bound,
    wahl_string,
)


def _fraction_is_wahl(t: TString) -> bool:
    """Independent oracle: n^2/(na-1) with gcd(n, a) = 1, read off the value."""
    f = hj_eval(t)
    p, q = f.numerator, f.denominator
    n = int(round(p**0.5))
    if n * n != p or n < 2:
        return False
    return (q + 1) % n == 0 and gcd(n, (q + 1) // n) == 1


@pytest.mark.parametrize(
    "f, expected",
    [(Fraction(4), [4]), (Fraction(9, 5), [2, 5]), (Fraction(2), [2]), ((9, 2), [5, 2])],
)
def test_hj_expand_examples(f, expected):
    assert list(hj_expand(f)) == expected


@pytest.mark.parametrize("bad", [(6, 4), (3, 3), (2, 5), (0, 1)])
def test_hj_expand_rejects(bad):
    with pytest.raises(ValueError):
        hj_expand(bad)


@pytest.mark.parametrize("t, f", [([4], Fraction(4)), ([2, 5], Fraction(9, 5)), ([5, 2], Fraction(9, 2))])
def test_hj_eval_examples(t, f):
    assert hj_eval(t) == f


def test_hj_eval_rejects_small_entry():
    with pytest.raises(ValueError):
        hj_eval([3, 1, 4])


@pytest.mark.parametrize("n, a, expected", [(2, 1, [4]), (3, 2, [2, 5]), (3, 1, [5, 2])])
def test_wahl_string_examples(n, a, expected):
    assert list(wahl_string(n, a)) == expected


def test_wahl_string_rejects_non_coprime():
    with pytest.raises(ValueError):
        wahl_string(4, 2)


def test_classify_examples():
    c = classify([4])
    assert (c.kind, c.n, c.a) == ("Wahl", 2, 1)
    c = classify([2, 5])
    assert (c.kind, c.n, c.a) == ("Wahl", 3, 2)
    assert classify([3]).kind == "NotT"
    # 1/2(1,1) has no d n^2 = 2 with n >= 2, so the Du Val A_1 point is not T here
    assert classify([2]).kind == "NotT"


def test_classify_t_not_wahl():
    # 1/8(1,3): d=2, n=2, a=1 -> p=8, q=3
    t = hj_expand((8, 3))
    c = classify(t)
    assert (c.kind, c.d, c.n, c.a) == ("T", 2, 2, 1)
    assert classify([3, 3]) == classify(t)


def test_generate_children_examples():
    assert generate_children([4]) == (TString([2, 5]), TString([5, 2]))
    assert generate_children([2, 5]) == (TString([2, 2, 6]), TString([3, 5, 2]))
    assert generate_children([5, 2]) == (TString([2, 5, 3]), TString([6, 2, 2]))
    with pytest.raises(ValueError):
        generate_children([3])


def test_enumerate_examples():
    assert enumerate_wahl(1) == [TString([4])]
    assert set(enumerate_wahl(2)) == {TString([4]), TString([2, 5]), TString([5, 2])}
    assert sum(1 for t in enumerate_wahl(3) if len(t) == 3) == 4


def test_enumeration_matches_fraction_oracle():
    # brute force: every string of length <= 4 with entries in 2..8
    from itertools import product

    ours = set(enumerate_wahl(4))
    brute = set()
    for r in range(1, 5):
        for entries in product(range(2, 9), repeat=r):
            t = TString(entries)
            if _fraction_is_wahl(t):
                brute.add(t)
    assert ours == brute


def test_discrepancy_examples():
    assert discrepancies([2, 5]) == (Fraction(-1, 3), Fraction(-2, 3))
    assert discrepancies([4]) == (Fraction(-1, 2),)
    d = discrepancies([2, 2, 6])
    assert d[0] + d[-1] == -1


def test_length_bound_examples():
    assert set(length_bound(5, 4, True, True)) == {1}
    assert set(length_bound(5, 4, False, True)) == {1, 2}
    b = length_bound(10, 2, False, True)
    assert b[0] == 1 and b[-1] == 6400 and len(b) == 6400
    with pytest.raises(ValueError, match="K_W\\^2 > K_S\\^2"):
        length_bound(4, 4)


def test_numerical_invariants():
    quintic = NumericalInvariants(k_squared=5, p_g=4)
    assert quintic.chi == 5
    assert quintic.one_above_noether_line()
    with pytest.raises(ValueError):
        NumericalInvariants(k_squared=5, p_g=4, q=0, chi=4)


def test_describe_json():
    assert describe([2, 5]) == {
        "entries": [2, 5],
        "class": {"kind": "Wahl", "n": 3, "a": 2},
        "discrepancies": ["-1/3", "-2/3"],
    }


# ---- properties ----------------------------------------------------------

fractions_st = st.tuples(st.integers(2, 10**6), st.integers(1, 10**6)).filter(
    lambda pq: pq[1] < pq[0] and gcd(*pq) == 1
)
strings_st = st.lists(st.integers(2, 9), min_size=1, max_size=8).map(TString)
WAHL_6 = enumerate_wahl(6)


@given(fractions_st)
def test_round_trip_fraction(pq):
    assert hj_eval(hj_expand(pq)) == Fraction(*pq)


@given(strings_st)
def test_round_trip_string(t):
    assert hj_expand(hj_eval(t)) == t


@given(strings_st)
def test_reversal_symmetry(t):
    assert classify(t.reversed()).kind == classify(t).kind


@given(strings_st)
def test_recursion_agrees_with_fraction_oracle(t):
    assert (classify(t).kind == "Wahl") == _fraction_is_wahl(t)


@settings(max_examples=60)
@given(st.sampled_from(WAHL_6))
def test_wahl_invariants(t):
    assert t.excess() == len(t) + 1
    c = classify(t)
    assert c.kind == "Wahl"
    assert wahl_string(c.n, c.a) in (t, t.reversed())
    d = discrepancies(t)
    assert all(-1 < a < 0 for a in d)
    assert d[0] + d[-1] == -1


@given(st.integers(2, 6))
def test_enumeration_prefix_stable(r):
    assert [t for t in enumerate_wahl(r) if len(t) <= r - 1] == enumerate_wahl(r - 1)

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wahlkit.localint import (
    FIGURE_INFO,
    FIGURES,
    ConfigRecord,
    Graph,
    Impossible,
    Inconclusive,
    LocalCurve,
    blowup_branch,
    blowup_following,
    case_one,
    classify_config,
    enumerate_configs,
    enumeration_graphs,
    even_case_families,
    find_config,
    mult,
    normal_form,
    oracle_mult,
    quotient_length,
    separation,
)

INF = math.inf
FORMS_8 = [("A", n) for n in range(1, 9)] + [("D", n) for n in range(4, 9)] + [("E", 6), ("E", 7), ("E", 8)]


def _split(family, n):
    return "minus" if family == "D" and n % 2 == 0 else "plus"


def test_normal_forms():
    assert str(normal_form("A", 1)) == "x^2 - y^2"
    assert str(normal_form("E", 8)) == "x^3 + y^5"
    assert normal_form("D", 4).coeffs == {(2, 1): 1, (0, 3): 1}
    assert normal_form("D", 6, variant="minus").coeffs == {(2, 1): 1, (0, 5): -1}
    assert normal_form("E", 7).coeffs == {(3, 0): 1, (1, 3): -1}
    for bad in [("D", 3), ("E", 9), ("A", 0), ("B", 2)]:
        with pytest.raises(ValueError):
            normal_form(*bad)
    with pytest.raises(ValueError):
        normal_form("A", 8, degree_cap=5)


def test_mult_examples():
    E8 = normal_form("E", 8)
    assert mult(E8, Graph.monomial("x", 2)) == 5
    assert mult(E8, Graph.parse("transversal")) == 3
    assert mult(normal_form("A", 2), Graph.parse("x = y^2")) == 3
    assert mult(normal_form("A", 1), Graph.parse("y = 0")) == 2


def test_containment_and_inconclusive():
    A3 = normal_form("A", 3)
    assert mult(A3, Graph.parse("x=y^2")) == INF
    assert mult(A3, Graph.parse("x=-y^2")) == INF
    # f only known to degree 3: y^4 terms of f^2 - y^4 could still cancel or not
    with pytest.raises(Inconclusive):
        mult(A3, Graph.x_of_y(0, 1, precision=3))
    assert mult(A3, Graph.x_of_y(0, 2, precision=4)) == 4
    # a curve that lost terms to the cap cannot certify high orders
    cut = LocalCurve.from_terms({(2, 0): 1, (0, 6): -1}, degree_cap=4)
    assert cut.truncated and str(cut) == "x^2"
    with pytest.raises(Inconclusive):
        mult(cut, Graph.x_of_y(0, 0, 1))
    assert mult(cut, Graph.parse("transversal")) == 2


def test_graph_parse():
    g = Graph.parse("x = y^2 - 1/2*y^3")
    assert g.solved_for == "x" and g.coeffs == (0, 1, Fraction(-1, 2)) and g.k == 2
    assert Graph.parse("y=3x").coeffs == (3,)
    assert Graph.parse("tangent:3") == Graph.monomial("x", 3)
    with pytest.raises(ValueError):
        Graph.parse("x = x^2")
    with pytest.raises(ValueError):
        Graph.parse("z = y")


def test_blowup_examples():
    assert str(blowup_branch(normal_form("A", 3))) == "x^2 - y^2"
    B1 = blowup_branch(normal_form("A", 1))
    assert str(B1) == "-1 + x^2"
    for q in (1, -1):
        moved = blowup_branch(normal_form("A", 1), shift=q)
        assert moved.order() == 1
    E8b = blowup_branch(normal_form("E", 8))
    assert E8b.coeffs == {(0, 3): 1, (3, 1): 1}  # y (x^3 + y^2): E plus a cusp
    with pytest.raises(ValueError, match="order"):
        blowup_branch(LocalCurve.from_terms({(1, 0): 1}))


def test_separation_examples():
    assert separation(normal_form("A", 1), Graph.parse("transversal")) == 1
    assert separation(normal_form("A", 3), Graph.parse("x=y^3")) == 2
    assert separation(LocalCurve.from_terms({(1, 0): 1}), Graph.parse("y=0")) == 0


@pytest.mark.parametrize("c", range(1, 7))
def test_separation_with_d_in_b(c):
    D = Graph.x_of_y()
    Bbar = LocalCurve.from_terms({(1, 0): 1, (0, c): -1, (1, 1): 3})
    assert mult(Bbar, D) == c
    assert separation(D.equation() * Bbar, D) == c


@pytest.mark.parametrize("family, n", FORMS_8)
def test_multiplicity_drop_law(family, n):
    B = normal_form(family, n, variant=_split(family, n))
    for g in enumeration_graphs(5):
        m = mult(B, g)
        if m == INF:
            continue
        B1, g1 = blowup_following(B, g)
        assert mult(B1, g1) == m - 2
        rec = classify_config(family, n, g)
        assert rec.mult - 2 * rec.separation >= 0


@pytest.mark.parametrize("family, n", FORMS_8)
def test_oracle_agrees(family, n):
    B = normal_form(family, n, variant=_split(family, n))
    for g in enumeration_graphs(5):
        assert oracle_mult(B, g) == mult(B, g)


def test_oracle_counts_staircase():
    B = normal_form("A", 3)
    g = Graph.parse("x=y^2+y^3")
    assert [quotient_length(B, g, N) for N in range(1, 8)] == [1, 2, 3, 4, 5, 5, 5]


def test_e8_dichotomy():
    E8 = normal_form("E", 8)
    seen = {mult(E8, g) for g in enumeration_graphs(6)}
    assert seen == {3, 5}


polys = st.dictionaries(
    st.tuples(st.integers(0, 5), st.integers(0, 5)),
    st.integers(-3, 3).filter(bool),
    max_size=6,
)
graphs = st.builds(
    lambda kind, cs: Graph(kind, cs),
    st.sampled_from(["x", "y"]),
    st.lists(st.integers(-2, 2), min_size=1, max_size=5),
)


@settings(max_examples=150, deadline=None)
@given(polys, graphs, st.sampled_from([1, 2]))
def test_drop_law_random(terms, g, drop):
    B = LocalCurve.from_terms({m: c for m, c in terms.items() if m[0] + m[1] >= drop})
    if B.is_zero():
        return
    m = mult(B, g)
    B1, g1 = blowup_following(B, g, drop=drop)
    m1 = mult(B1, g1)
    assert m1 == (INF if m == INF else m - drop)


@settings(max_examples=60, deadline=None)
@given(polys, graphs)
def test_oracle_random(terms, g):
    B = LocalCurve.from_terms({m: c for m, c in terms.items() if m[0] + m[1] >= 1})
    if B.is_zero():
        return
    m = mult(B, g)
    assert oracle_mult(B, g, n_max=12) == (m if m <= 12 else INF)


def test_classify_examples():
    rec = classify_config("A", 4, "x=y^2")
    assert (rec.mult, rec.post_blowup_singular) == (4, True)
    e7 = classify_config("E", 7, Graph.monomial("x", 2))
    assert e7.mult == 5 and e7.figure == "same_points_5(g)"
    assert classify_config("D", 5, "x=y^2").to_json() == {
        "sing": "D5",
        "k": 2,
        "mult": 4,
        "separation": 2,
        "post_blowup_singular": True,
        "figure": "same_points_4(e)",
        "graph": "x = y^2",
    }
    assert classify_config("E", 6, "transversal").k == "transversal"


def test_impossible_requests():
    r = find_config("E", 7, 4)
    assert isinstance(r, Impossible) and "not conclusive" not in r.reason
    assert isinstance(find_config("E", 8, 4), Impossible)
    assert isinstance(find_config("E", 6, 5), Impossible)
    ok = find_config("A", 3, 5)
    assert isinstance(ok, ConfigRecord) and ok.figure == "same_points_5(a)"


def test_case_one_reproduces_figures():
    records = list(enumerate_configs(10, 5))
    for rec in records:
        assert case_one(rec) == (rec.figure is not None), rec.to_json()
        if rec.figure:
            assert (rec.mult, rec.separation) == FIGURE_INFO[rec.figure]
    hits = Counter(r.figure for r in records if r.figure)
    assert set(hits) == {label for label, *_ in FIGURES}
    assert len(FIGURES) == 9 + 8 + 8


def test_sub_cases_at_the_edges():
    # D_5 with the singular branch tangent gives 4, D_7 gives 5
    assert classify_config("D", 5, "x=y^2").mult == 4
    assert classify_config("D", 7, "x=y^2").figure == "same_points_5(c)"
    # mult 5 with two branches tangent: D_6 and every larger even D_n with k = 2
    for n in (6, 8, 10):
        assert classify_config("D", n, "x=2y^2").figure == "same_points_5(e)"
    # A_3 with f = a y^2 + ...: a = +-1 is the special case
    assert classify_config("A", 3, "x=2y^2").figure == "same_points_4(b)"
    assert classify_config("A", 3, "x=-y^2+y^3").figure == "same_points_5(a)"


def test_even_case_families():
    fams = even_case_families(8, 5)
    assert set(fams) == {"A", "D", "E6", "E7"}
    assert fams["E6"] == [4]

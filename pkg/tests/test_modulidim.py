from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wahlkit.modulidim import (
    D_IN_B,
    NAMED_TYPES,
    POINT_MENU,
    LocusSpec,
    PointSpec,
    aut_dim,
    constraint_table,
    enumerate_specs,
    linear_system_dim,
    locus_dimension,
)

EXPECTED = {
    "1": ("3+6+48-12-6=39", 39),
    "1'": ("3+6+48-12-1-6=38", 38),
    "1''": ("3+6+48-12-7=38", 38),
    "1'''": ("3+5+48-12-6=38", 38),
    "2a": ("1+4+48-6-1-1-6=39", 39),
    "2a'": ("1+3+48-6-2-6=38", 38),
    "2a''": ("1+4+48-6-1-2-6=38", 38),
    "2b": ("1+4+48-6-1-1-7=38", 38),
}


@pytest.mark.parametrize("base, cls, dim", [
    ("F0", "Delta", 3), ("F0", "Gamma", 1), ("F0", "6Delta", 48), ("F0", "5Delta", 35),
    ("cone", "Delta", 3), ("cone", "Gamma", 1), ("cone", "6Delta", 48), ("cone", "5Delta", 35),
])
def test_linear_systems(base, cls, dim):
    assert linear_system_dim(base, cls) == dim


def test_aut():
    assert aut_dim("F0") == 6 and aut_dim("cone") == 7
    assert aut_dim("cone") - aut_dim("F0") == 1
    with pytest.raises(ValueError):
        aut_dim("P2")
    with pytest.raises(ValueError):
        linear_system_dim("F0", "7Gamma")


@pytest.mark.parametrize("label", sorted(EXPECTED))
def test_named_types(label):
    rep = locus_dimension(NAMED_TYPES[label])
    assert (rep.formula(), rep.total) == EXPECTED[label]
    assert rep.type_label == label
    assert rep.total == sum(rep.terms.values())


def test_json_shape():
    assert locus_dimension(NAMED_TYPES["1"]).to_json() == {
        "terms": {"dim_D": 3, "k": 6, "dim_B": 48, "mult": -12, "sing": 0, "aut": -6},
        "total": 39,
        "type_label": "1",
    }
    assert locus_dimension(NAMED_TYPES["2a'"]).to_json()["unverified"] == ["A3@4"]


def test_d_in_b():
    rep = locus_dimension(D_IN_B)
    assert rep.formula() == "3+10+35-10-6=32"


def test_relations_between_types():
    tot = {k: locus_dimension(v).total for k, v in NAMED_TYPES.items()}
    assert tot["1'"] == tot["1"] - 1
    r2a, r2b = locus_dimension(NAMED_TYPES["2a"]), locus_dimension(NAMED_TYPES["2b"])
    diff = {k for k in r2a.terms if r2a.terms[k] != r2b.terms[k]}
    assert diff == {"aut"}


def test_codim_validation():
    with pytest.raises(ValueError, match="codimension 1"):
        PointSpec(2, "node", sing_codim=3)
    with pytest.raises(ValueError, match="built-in"):
        PointSpec(4, "A5")
    with pytest.raises(ValueError):
        PointSpec(0)
    with pytest.raises(ValueError, match="total multiplicity"):
        locus_dimension(LocusSpec("F0", "Gamma", (PointSpec(4), PointSpec(3))))


def test_taylor_guard():
    deep = PointSpec(4, "A7", sing_codim=5, taylor_degree=6)
    with pytest.raises(ValueError, match="n = 5"):
        locus_dimension(LocusSpec("F0", "Gamma", (deep, PointSpec(1), PointSpec(1))))
    ok = PointSpec(4, "A3", sing_codim=2, taylor_degree=4)
    assert locus_dimension(LocusSpec("F0", "Gamma", (ok, PointSpec(1), PointSpec(1)))).total == 38


def test_constraint_table():
    t = constraint_table()
    assert t[("F0", "Delta")] == {"constant": 33, "m_for_39": "k-6", "m_for_38": "k-5"}
    assert t[("cone", "Delta")]["constant"] == 32 and t[("cone", "Delta")]["m_for_38"] == "k-6"
    assert t[("F0", "Gamma")] == {"constant": 37, "m_for_39": "k-2", "m_for_38": "k-1"}
    assert t[("cone", "Gamma")] == {"constant": 36, "m_for_39": "k-3", "m_for_38": "k-2"}


def test_enumeration_gives_exactly_the_named_types():
    found = enumerate_specs(38)
    labels = sorted(rep.type_label for _, rep in found)
    assert labels == sorted(NAMED_TYPES)
    for spec, rep in found:
        assert rep.total == EXPECTED[rep.type_label][1]


@given(st.lists(st.sampled_from(POINT_MENU), min_size=1, max_size=6), st.sampled_from(["F0", "cone"]))
def test_dimension_is_additive(points, base):
    spec = LocusSpec(base, "Delta", tuple(points))
    if sum(p.mult for p in points) > 12:
        with pytest.raises(ValueError):
            locus_dimension(spec)
        return
    rep = locus_dimension(spec)
    expected = 3 + len(points) + 48 - sum(p.mult for p in points) - sum(p.sing_codim for p in points) - aut_dim(base)
    assert rep.total == expected

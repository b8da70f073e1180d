from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topgen.errors import InvalidGroupType
from topgen.rootsys import EXCEPTIONAL, build_root_system
from topgen.subsys import (
    ParabolicDescriptor,
    bds_iterated,
    bds_maximal_subsystems,
    canonical_subgroup_label,
    catalog_maximal,
    coset_dim_parabolic,
    curated_records,
    find_subgroup,
    levi_subsystem,
    parse_label,
    subsystem_dim,
)

COSET_DIMS = {
    "E8": [78, 92, 98, 106, 104, 97, 83, 57],
    "E7": [33, 42, 47, 53, 50, 42, 27],
    "E6": [16, 21, 25, 29, 25, 16],
    "F4": [15, 20, 20, 15],
    "G2": [5, 5],
}


@pytest.mark.parametrize("name", COSET_DIMS)
def test_parabolic_coset_dims(name):
    rs = build_root_system(name)
    got = [coset_dim_parabolic(ParabolicDescriptor(rs.group_type, i)) for i in range(1, rs.rank + 1)]
    assert got == COSET_DIMS[name]


@pytest.mark.parametrize("name", COSET_DIMS)
def test_levi_accounts_for_remaining_roots(name):
    rs = build_root_system(name)
    for i in range(1, rs.rank + 1):
        pd = ParabolicDescriptor(rs.group_type, i)
        levi = levi_subsystem(pd)
        assert levi.rank == rs.rank
        assert 2 * coset_dim_parabolic(pd) + levi.dim == rs.dim


@pytest.mark.parametrize(
    "name, expected",
    [
        ("E8", {"D8", "A1E7", "A8", "A2E6", "A4^2"}),
        ("F4", {"B4", "A1C3", "A2~A2"}),
        ("G2", {"A1~A1", "A2"}),
        ("E7", {"A7", "A1D6", "A2A5"}),
        ("E6", {"A1A5", "A2^3"}),
    ],
)
def test_prime_mark_deletions(name, expected):
    got = {sd.label for sd in bds_maximal_subsystems(build_root_system(name))}
    assert got == expected
    assert all(parse_label(lab).rank == build_root_system(name).rank for lab in got)


@pytest.mark.parametrize("name", EXCEPTIONAL)
def test_iterated_deletion_covers_catalog_subsystems(name):
    rs = build_root_system(name)
    reached = bds_iterated(rs)
    for rec in curated_records(name):
        if rec.kind != "subsystem" or rec.descriptor.torus_rank:
            continue
        if not rec.char_predicate.admits(0):
            # special-isogeny subgroups exist only in characteristic 2 or 3
            continue
        assert rec.descriptor.label in reached, rec.label


@pytest.mark.parametrize("label", ["A1E7", "A4^2", "A2~A2", "D4T2", "A1^3T1", "~A1A1"])
def test_label_round_trip(label):
    sd = parse_label(label)
    assert parse_label(sd.label) == sd
    assert sd.dim == subsystem_dim(sd)


def test_label_normalization():
    assert canonical_subgroup_label("A_1 E_7") == "A1E7"
    assert canonical_subgroup_label("A4^{2}") == "A4^2"
    assert canonical_subgroup_label("P8") == "P8"
    assert parse_label("E7A1").label == "A1E7"


@given(st.lists(st.sampled_from(["A1", "A2", "~A1", "B3", "G2", "D4"]), min_size=1, max_size=4), st.integers(0, 3))
def test_label_order_irrelevant(parts, torus):
    text = "".join(parts) + (f"T{torus}" if torus else "")
    sd = parse_label(text)
    assert parse_label("".join(reversed(parts)) + (f"T{torus}" if torus else "")) == sd
    assert sd.semisimple_rank == sum(int(p.lstrip("~")[1:]) for p in parts)


def test_catalog_depends_on_characteristic():
    g2_generic = {r.label for r in catalog_maximal("G2", 0)}
    g2_three = {r.label for r in catalog_maximal("G2", 3)}
    assert "~A2" in g2_three and "~A2" not in g2_generic
    for rec in catalog_maximal("E8", 0):
        assert rec.coset_dim + rec.dim_m0 == 248
        assert rec.citation


def test_catalog_rejects_unsupported():
    with pytest.raises(InvalidGroupType):
        catalog_maximal("A3", 0)
    with pytest.raises(ValueError):
        catalog_maximal("E8", 4)


def test_find_subgroup():
    assert find_subgroup("E8", "P8")[0].coset_dim == 57
    assert find_subgroup("E8", "E7A1")[0].label == "A1E7"
    assert find_subgroup("G2", "~A2", p=2) == []

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topgen.errors import InvalidGroupType
from topgen.rootsys import (
    EXCEPTIONAL,
    TORSION_GROUPS,
    GroupType,
    build_root_system,
    cartan_matrix,
    extended_diagram,
    reflect,
    weyl_group_order,
)

DATA = {
    # dim, Coxeter number, |W|, marks
    "E8": (248, 30, 696729600, (2, 3, 4, 6, 5, 4, 3, 2)),
    "E7": (133, 18, 2903040, (2, 2, 3, 4, 3, 2, 1)),
    "E6": (78, 12, 51840, (1, 2, 2, 3, 2, 1)),
    "F4": (52, 12, 1152, (2, 3, 4, 2)),
    "G2": (14, 6, 12, (3, 2)),
    "D4": (28, 6, 192, (1, 2, 1, 1)),
    "B2": (10, 4, 8, (1, 2)),
}


@pytest.mark.parametrize("name", TORSION_GROUPS)
def test_basic_invariants(name):
    dim, h, w, marks = DATA[name]
    rs = build_root_system(name)
    assert rs.dim == dim
    assert rs.coxeter_number == h
    assert rs.dim == rs.rank * (rs.coxeter_number + 1)
    assert weyl_group_order(rs) == w
    assert tuple(rs.highest_root) == marks
    assert len(rs.roots) == 2 * len(rs.positive_roots)
    assert sum(rs.highest_root) + 1 == h


@pytest.mark.parametrize("name", TORSION_GROUPS)
def test_extended_marks_start_with_one(name):
    ed = extended_diagram(build_root_system(name))
    assert ed.marks[0] == 1
    assert sum(ed.marks) == build_root_system(name).coxeter_number


@pytest.mark.parametrize("name", ["F4", "G2", "B2"])
def test_long_short_split(name):
    rs = build_root_system(name)
    n_long = len(rs.long_roots)
    assert 0 < n_long < len(rs.roots)
    assert rs.is_long(rs.highest_root)


def test_cartan_conventions():
    g2 = cartan_matrix(GroupType.parse("G2"))
    assert [list(r) for r in g2] == [[2, -3], [-1, 2]]
    f4 = cartan_matrix(GroupType.parse("F4"))
    assert f4[2][1] == -2 and f4[1][2] == -1


@pytest.mark.parametrize("text", ["E9", "G3", "F5", "X2", "A0", "", "E"])
def test_invalid_types(text):
    with pytest.raises((InvalidGroupType, ValueError)):
        GroupType.parse(text)


def test_parse_round_trip():
    for name in TORSION_GROUPS:
        assert str(GroupType.parse(name)) == name
    assert EXCEPTIONAL == ("E8", "E7", "E6", "F4", "G2")


@given(st.sampled_from(TORSION_GROUPS), st.data())
def test_root_set_closed_under_simple_reflections(name, data):
    rs = build_root_system(name)
    roots = set(map(tuple, rs.roots))
    root = data.draw(st.sampled_from(rs.roots))
    i = data.draw(st.integers(0, rs.rank - 1))
    image = tuple(reflect(tuple(root), i, rs.cartan))
    assert image in roots
    assert rs.is_long(image) == rs.is_long(tuple(root))

from __future__ import annotations

from fractions import Fraction

import pytest

from topgen.classdata import (
    DeltaForm,
    alpha_records,
    class_records,
    delta,
    dump_all,
    find_class,
    kappa,
    kappa_witnesses,
    large_class_alpha_bound,
    lookup_alpha,
    lookup_class_dim,
    large_alpha_rows,
)
from topgen.errors import InvalidGroupType, NotCurated
from topgen.rootsys import EXCEPTIONAL, build_root_system
from topgen.subsys import find_subgroup

KAPPA = {"E8": Fraction(15, 19), "E7": Fraction(7, 9), "E6": Fraction(10, 13), "F4": Fraction(3, 4), "G2": Fraction(2, 3)}
CHARS = (0, 2, 3, 5, 7)


@pytest.mark.parametrize("name", EXCEPTIONAL)
@pytest.mark.parametrize("p", CHARS)
def test_kappa(name, p):
    assert kappa(name, p) == KAPPA[name]
    assert all(w.alpha(p) == KAPPA[name] for w in kappa_witnesses(name, p))


def test_kappa_attained_by_long_root_elements():
    assert {(w.subgroup_label, w.class_label) for w in kappa_witnesses("E8")} == {("P8", "u_a")}


def test_kappa_rejects_classical():
    with pytest.raises(InvalidGroupType):
        kappa("D4")


@pytest.mark.parametrize("p", CHARS)
def test_stored_alphas_in_unit_interval(p):
    for rec in alpha_records():
        if rec.char_predicate.admits(p):
            assert 0 <= rec.alpha(p) < 1, rec


@pytest.mark.parametrize("p", CHARS)
def test_large_alphas_are_exactly_the_large_alpha_rows(p):
    # every stored alpha >= 2/3 must appear in the list of large ratios and vice versa
    listed = {
        (str(t.ambient), t.subgroup_label, t.class_label): t.alpha
        for t in large_alpha_rows()
        if t.char_predicate.admits(p) and find_subgroup(t.ambient, t.subgroup_label, p)
    }
    large = {
        (str(r.ambient), r.subgroup_label, r.class_label): r.alpha(p)
        for r in alpha_records()
        if r.char_predicate.admits(p)
        and find_subgroup(r.ambient, r.subgroup_label, p)
        and r.alpha(p) >= Fraction(2, 3)
    }
    assert large == listed


def test_delta():
    assert delta(2, 2) == 1 and delta(2, 3) == 0
    form = DeltaForm(4, 1, 3)
    assert form.at(3) == 5 and form.at(2) == 4 and form.at(0) == 4


def test_class_lookup_and_aliases():
    assert lookup_class_dim("E8", "u_a", 0) == 58
    assert find_class("E8", "A1", 0).label == "u_a"
    assert find_class("F4", "ss(B4)", 3).label == "t"
    with pytest.raises(NotCurated):
        find_class("F4", "u_b", 3)
    with pytest.raises(NotCurated):
        find_class("E8", "no-such-class", 0)


def test_class_dims_are_even_and_bounded():
    for rec in class_records():
        rs = build_root_system(rec.ambient)
        assert rec.dim_class % 2 == 0
        assert 0 < rec.dim_class <= rs.dim - rs.rank


def test_lookup_alpha():
    assert lookup_alpha("E8", "P8", "u_a", 0) == Fraction(15, 19)
    assert lookup_alpha("G2", "P1", "u_a", 0) == Fraction(2, 5)
    assert lookup_alpha("G2", "P2", "u_a", 0) == Fraction(3, 5)
    with pytest.raises(NotCurated):
        lookup_alpha("E8", "P8", "no-such-class", 0)


@pytest.mark.parametrize("r, want", [(2, Fraction(3, 5)), (3, Fraction(2, 5)), (31, Fraction(2, 5))])
def test_large_class_bound(r, want):
    b = large_class_alpha_bound("E8", "P8", r)
    assert b.value == want and b.strict


def test_large_class_bound_d4_exceptions():
    assert large_class_alpha_bound("D4", "A2", 3).value == Fraction(2, 5)
    assert not large_class_alpha_bound("D4", "A2", 3).strict
    for r in (2, 3):
        for sub in ("B3", "C3"):
            b = large_class_alpha_bound("D4", sub, r)
            assert b.value == Fraction(3, 7) and b.exact


def test_dump_has_citations():
    data = dump_all()
    assert set(data) >= {"classes", "alpha", "subgroups", "large_alpha"}
    for section in ("alpha", "subgroups", "classes"):
        assert all(row["citation"] for row in data[section])

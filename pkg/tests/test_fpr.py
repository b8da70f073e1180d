from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topgen.errors import InconsistentDimensions, InvalidOrder
from topgen.fpr import (
    fixed_space_dim,
    intersection_from_alpha,
    perm_char_eval,
    perm_char_polynomials,
    refined_semisimple_parabolic_bound,
    semisimple_parabolic_bound,
    unipotent_borel_bound,
    verify_alpha_tables,
)
from topgen.rootsys import GroupType
from topgen.subsys import ParabolicDescriptor, parse_label


@given(st.integers(1, 300), st.data())
def test_fixed_space_identity(dim_x, data):
    dim_class = data.draw(st.integers(0, dim_x))
    inter = data.draw(st.integers(0, dim_class))
    fc = fixed_space_dim(dim_x, dim_class, inter)
    assert fc.dim_fixed == dim_x - dim_class + inter
    assert fc.alpha == Fraction(fc.dim_fixed, dim_x)
    assert fc.beta == dim_x - fc.dim_fixed
    assert intersection_from_alpha(fc.alpha, dim_x, dim_class) == inter


@pytest.mark.parametrize("args", [(0, 1, 0), (10, 5, 6), (10, -1, 0), (10, 25, 10)])
def test_fixed_space_rejects_inconsistent(args):
    with pytest.raises(InconsistentDimensions):
        fixed_space_dim(*args)


def test_e8_long_root_on_p8():
    fc = fixed_space_dim(57, 58, 46)
    assert fc.alpha == Fraction(15, 19)


def test_semisimple_bounds():
    e6 = GroupType.parse("E6")
    pd = ParabolicDescriptor(e6, 2)
    a2_cubed = parse_label("A2^3")
    assert semisimple_parabolic_bound(a2_cubed, pd) == 9
    assert refined_semisimple_parabolic_bound(a2_cubed, pd)[0] == 8
    other = parse_label("A1A5")
    assert refined_semisimple_parabolic_bound(other, pd) == (semisimple_parabolic_bound(other, pd), None)


def test_unipotent_bound():
    assert unipotent_borel_bound(190, 8) == 91
    with pytest.raises(InconsistentDimensions):
        unipotent_borel_bound(5, 8)


@pytest.mark.parametrize("i, degree", [(1, 11), (2, 14), (4, 10)])
def test_perm_chars(i, degree):
    poly = perm_char_polynomials()[i]
    assert poly.is_monic and poly.degree == degree
    for q in (2, 3, 4, 5):
        value, deg = perm_char_eval(i, q)
        assert value > 0 and deg == degree
        assert value == poly(q)


def test_perm_char_errors():
    with pytest.raises(InvalidOrder):
        perm_char_eval(3, 2)
    with pytest.raises(InvalidOrder):
        perm_char_eval(1, 1)


@pytest.mark.parametrize("p", [0, 2, 3, 5, 7])
def test_alpha_tables_consistent(p):
    rows = verify_alpha_tables(p)
    assert rows
    for row in rows:
        assert row.verdict.startswith("pass"), row
        assert row.integral
        assert (row.alpha * row.dim_X).denominator == 1
        if row.dim_intersection is not None:
            assert 0 <= row.dim_intersection <= row.dim_M

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topgen.errors import InvalidGroupType, InvalidOrder, NotCurated
from topgen.gencrit import (
    AlphaTerm,
    GenerationQuery,
    check_cor1,
    check_t_tuple,
    d_threshold,
    generic_free_check,
    minimal_t,
    sharpness_fixed_space,
    strictly_below,
)
from topgen.rootsys import EXCEPTIONAL

MINIMAL_T = {"E8": 5, "E7": 5, "E6": 5, "F4": 5, "G2": 4}
CHARS = (0, 2, 3, 5, 7)

fractions = st.fractions(min_value=0, max_value=1, max_denominator=60)
terms = st.builds(AlphaTerm, fractions, st.booleans(), st.just("test"))


@given(st.lists(terms, min_size=1, max_size=6), st.integers(1, 5))
def test_strictly_below(ts, threshold):
    total = sum(t.value for t in ts)
    result = strictly_below(ts, Fraction(threshold))
    if total < threshold:
        assert result
    elif total > threshold:
        assert not result
    else:
        assert result == any(t.strict for t in ts)


@pytest.mark.parametrize("name", EXCEPTIONAL)
@pytest.mark.parametrize("p", CHARS)
def test_minimal_t_boundary(name, p):
    t = minimal_t(name, p)
    assert t == MINIMAL_T[name]
    assert check_t_tuple(GenerationQuery(name, p, ("u_a",) * t)).verdict == "pass"
    below = check_t_tuple(GenerationQuery(name, p, ("u_a",) * (t - 1)))
    assert below.verdict == "fail"
    assert not below.conservative


def test_e8_fails_at_p8():
    rep = check_t_tuple(GenerationQuery("E8", 0, ("u_a",) * 4))
    assert rep.tightest.key == "P8"
    assert rep.tightest.sum_alpha == Fraction(60, 19)
    assert any(row.key == "P8" for row in rep.failing())


def test_closure_bound_and_fallback():
    rep = check_t_tuple(GenerationQuery("E8", 0, ("ss(D8)", "u_a", "u_a")))
    first = {row.terms[0] for row in rep.rows}
    assert first == {AlphaTerm(Fraction(2, 3), True, "closure-bound")}
    assert not rep.conservative
    rep = check_t_tuple(GenerationQuery("E8", 0, ("mystery", "u_a", "u_a", "u_a", "u_a")))
    assert rep.conservative
    assert any("kappa" in c for c in rep.caveats)


def test_t3_caveat():
    rep = check_t_tuple(GenerationQuery("F4", 3, ("t", "u_a", "ss(A1C3)")))
    assert any("t = 3" in c for c in rep.caveats)


def test_query_validation():
    with pytest.raises(InvalidOrder):
        GenerationQuery("E8", 0, ("u_a",))
    with pytest.raises(InvalidGroupType):
        GenerationQuery("D4", 0, ("u_a", "u_a"))
    with pytest.raises(ValueError):
        GenerationQuery("E8", 4, ("u_a", "u_a"))


@pytest.mark.parametrize("name", EXCEPTIONAL)
@pytest.mark.parametrize("p", CHARS)
def test_sharpness(name, p):
    top = 3 if name == "G2" else 4
    for t in range(1, top + 1):
        assert sharpness_fixed_space(name, t, p).status == "forced"
    assert sharpness_fixed_space(name, top + 1, p).status != "forced"


def test_d_threshold():
    assert [d_threshold(g) for g in EXCEPTIONAL] == [720, 378, 216, 144, 36]


def test_generic_free():
    v = generic_free_check("E8", 3875, class_list=("u_a", "ss(D8)"))
    assert v.generically_free and v.d_G == 720
    assert [c.factor for c in v.classes] == [5, 3]
    assert not generic_free_check("E8", 248).generically_free
    with pytest.raises(ValueError):
        generic_free_check("E8", 10, 10)
    with pytest.raises(NotCurated):
        generic_free_check("E8", 3875, class_list=("nope",))


def test_cor1_d4_exact_values():
    rows = {r.key: r for r in check_cor1("D4", 2, 3).rows}
    assert rows["B3"].total == rows["C3"].total == Fraction(6, 7)
    assert {r.key: r for r in check_cor1("D4", 3, 3).rows}["A2"].total == Fraction(4, 5)


@pytest.mark.parametrize("name", ["E8", "F4", "G2", "D4", "B2"])
@pytest.mark.parametrize("r, s", [(2, 3), (3, 3), (2, 31), (29, 31)])
def test_cor1_passes(name, r, s):
    rep = check_cor1(name, r, s)
    assert rep.passed
    assert rep.tightest.total <= 1


def test_cor1_excluded_pair():
    with pytest.raises(InvalidOrder):
        check_cor1("E8", 2, 2)
    with pytest.raises(InvalidOrder):
        check_cor1("E8", 4, 3)


def test_report_serializes():
    d = check_t_tuple(GenerationQuery("G2", 0, ("u_a",) * 4)).to_dict()
    assert d["verdict"] == "pass" and d["t"] == 4
    assert all("/" in row["sum_alpha"] for row in d["rows"])

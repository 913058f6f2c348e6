import pytest
from hypothesis import given, settings

from conftest import tabloids
from nps_tableaux.arith import factorial
from nps_tableaux.shapes import Cell, Partition, partitions_up_to, subpartitions
from nps_tableaux.tableaux import (
    FillingError,
    GridError,
    HookTableau,
    Tabloid,
    conjugate_hook,
    conjugate_tabloid,
    enumerate_hook_tableaux,
    enumerate_syt,
    enumerate_tabloids,
    f_census,
    format_grid,
    hook_length_formula,
    parse_grid,
    skew_syt_bruteforce,
    skew_syt_count,
)


def P(*parts):
    return Partition(parts)


def test_tabloid_validation():
    with pytest.raises(FillingError, match="bijection"):
        Tabloid.parse("1,1;2")
    with pytest.raises(FillingError):
        Tabloid.parse("1;2,3")
    with pytest.raises(GridError):
        parse_grid("1,;2")
    with pytest.raises(FillingError):
        Tabloid.standard("2,1;3")


def test_hook_bounds_name_the_cell():
    with pytest.raises(FillingError, match=r"\(1,2\)"):
        HookTableau.parse("0,1;0")
    assert HookTableau.parse("-1,0;0")[1, 1] == -1


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_tabloids(P(2))) == 2
    assert sum(1 for _ in enumerate_tabloids(P(2, 1))) == 6
    assert sum(1 for _ in enumerate_tabloids(P(3, 2))) == 120
    assert [str(t) for t in enumerate_syt(P(2, 1))] == ["1,2;3", "1,3;2"]
    assert sum(1 for _ in enumerate_syt(P(5))) == 1
    assert sum(1 for _ in enumerate_syt(P(4, 4, 3))) == 462
    assert sum(1 for _ in enumerate_hook_tableaux(P(2, 1))) == 3
    assert sum(1 for _ in enumerate_hook_tableaux(P(1))) == 1
    assert sum(1 for _ in enumerate_hook_tableaux(P(2, 2))) == 12


def test_counts_for_small_shapes():
    for lam in partitions_up_to(6):
        assert sum(1 for _ in enumerate_tabloids(lam)) == factorial(lam.n)
        assert sum(1 for _ in enumerate_hook_tableaux(lam)) == lam.hook_product


def test_conjugation():
    t = conjugate_tabloid(Tabloid.parse("2,1"))
    assert t.shape == P(1, 1) and str(t) == "2;1"
    assert str(conjugate_tabloid(Tabloid.parse("1,2;3"))) == "1,3;2"
    assert conjugate_tabloid(Tabloid.parse("1")) == Tabloid.parse("1")
    assert str(conjugate_hook(HookTableau.parse("1,0;0"))) == "-1,0;0"
    assert conjugate_hook(HookTableau.zero(P(3, 1))) == HookTableau.zero(P(2, 1, 1))
    h = conjugate_hook(HookTableau.parse("1,0"))
    assert h.shape == P(1, 1) and h[1, 1] == -1


@pytest.mark.parametrize("parts, expected", [((2, 1), 2), ((2, 2), 2), ((4, 4, 3), 462)])
def test_hook_length_formula(parts, expected):
    assert hook_length_formula(Partition(parts)) == expected


def test_skew_counts():
    assert skew_syt_count(P(2, 1), P()) == 2
    assert skew_syt_count(P(2, 1), P(1)) == 2
    assert skew_syt_count(P(2, 2), P(1)) == 2
    for lam in partitions_up_to(5):
        assert skew_syt_count(lam, P()) == hook_length_formula(lam)
        for mu in subpartitions(lam):
            assert skew_syt_count(lam, mu) == skew_syt_bruteforce(lam, mu)


def test_census_examples():
    c = f_census(P(2, 1))
    nonzero = {key: v for key, v in c.table.items() if v}
    assert nonzero == {
        (1, Cell(1, 1)): 2,
        (2, Cell(1, 2)): 1,
        (2, Cell(2, 1)): 1,
        (3, Cell(1, 2)): 1,
        (3, Cell(2, 1)): 1,
    }
    row = f_census(P(4))
    assert all(row[k, (1, j)] == int(k == j) for k in range(1, 5) for j in range(1, 5))


@pytest.mark.parametrize("lam", partitions_up_to(6, 1), ids=str)
def test_census_properties(lam):
    enum, det = f_census(lam, "enumeration"), f_census(lam, "determinant")
    assert enum.table == det.table and enum.total == det.total
    conj = f_census(lam.conjugate())
    for x in lam.cells:
        assert sum(enum.column(x)) == enum.total
        for k in range(1, lam.n + 1):
            assert enum[k, x] == conj[k, x.conjugate()]


@settings(max_examples=200)
@given(tabloids(max_n=8))
def test_grid_text_round_trip(t):
    assert Tabloid.parse(format_grid(t.rows)) == t
    assert Tabloid.parse(str(t)) == t
    assert t.conjugate().conjugate() == t


def test_round_trip_exhaustive():
    for lam in partitions_up_to(5):
        for t in enumerate_tabloids(lam):
            assert Tabloid.parse(str(t), lam) == t
        for h in enumerate_hook_tableaux(lam):
            assert HookTableau.parse(str(h), lam) == h

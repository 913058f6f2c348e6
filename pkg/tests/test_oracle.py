from fractions import Fraction

import pytest

from nps_tableaux import oracle
from nps_tableaux.arith import factorial
from nps_tableaux.engine import nps_sort
from nps_tableaux.shapes import Cell, Partition, neighbors, partitions_up_to
from nps_tableaux.tableaux import Tabloid, enumerate_tabloids

T = Tabloid.parse


def P(*parts):
    return Partition(parts)


def test_sort_cost():
    assert oracle.sort_cost(T("1,2;3"))[0] == 0
    assert oracle.sort_cost(T("2,1;3")) == (1, {Cell(1, 1): 1, Cell(1, 2): 0, Cell(2, 1): 0})
    assert oracle.sort_cost(T("11,7,9,3;4,1,2,5;10,6,8"))[0] == 10


def test_complexity_spot_values():
    assert oracle.complexity_bruteforce(P(2)) == Fraction(1, 2)
    assert oracle.complexity_bruteforce(P(2, 1)) == Fraction(2, 3)
    assert oracle.complexity_bruteforce(P(3)) == Fraction(3, 2)
    assert oracle.complexity_bruteforce(P(1)) == 0


def test_drop_table_21():
    d = oracle.drop_bruteforce(P(2, 1))
    assert all(d[1, x] == 2 for x in P(2, 1).cells)
    assert d[2, Cell(1, 2)] == 3 and d[2, Cell(1, 1)] == 0
    assert d[3, Cell(1, 1)] == 0


def test_exchange_spot_values():
    e = oracle.exchange_bruteforce(P(2, 1))
    assert e[1, 2] == 2 and e[1, 3] == 2 and e[2, 3] == 0
    assert oracle.exchange_numbers(P(2, 1)) == {1: 2, 2: 0}
    assert oracle.exchange_numbers(P(2)) == {1: 1}


def test_exit_spot_values():
    x = oracle.signed_exit_bruteforce(P(2, 1))
    assert (x[1, Cell(1, 1)], x[1, Cell(1, 2)], x[1, Cell(2, 1)]) == (-2, 1, 1)
    y = oracle.signed_exit_bruteforce(P(2))
    assert (y[1, Cell(1, 1)], y[1, Cell(1, 2)]) == (-1, 1)


def test_e_count():
    assert oracle.e_count(T("2,1;3"), 1) == 1
    assert oracle.e_count(T("1,2;3"), 1) == 0


def test_exchange_set_21():
    got = [(str(w.tabloid), w.partner, w.index) for w in oracle.exchange_set(P(2, 1), 1)]
    assert got == [("2,1;3", 2, 1), ("2,3;1", 2, 1), ("3,1;2", 3, 1), ("3,2;1", 3, 1)]


@pytest.mark.parametrize("lam", partitions_up_to(5, 1), ids=str)
def test_table_invariants(lam):
    n = lam.n
    tables = oracle.stat_tables(lam)
    for k in range(1, n + 1):
        assert sum(tables.drop[k, x] for x in lam.cells) == factorial(n)
    assert (tables.complexity * factorial(n)).denominator == 1
    # only moves between neighbours are ever recorded
    for (k, x, y) in tables.local_exchange:
        assert y in neighbors(lam, x)[0]
    pair = oracle.exchange_bruteforce(lam)
    for k in range(1, n):
        assert len({pair[k, l] for l in range(k + 1, n + 1)}) == 1


@pytest.mark.parametrize("lam", partitions_up_to(4, 1), ids=str)
def test_e_equals_cohook_difference(lam):
    for t in enumerate_tabloids(lam):
        trace = nps_sort(t)
        for k in range(1, lam.n + 1):
            x = oracle.drop_cell(trace, k)
            y = trace.output.position(k)
            assert oracle.e_count(t, k, trace) == (x.row + x.col) - (y.row + y.col)


def test_local_conjugation_fails_somewhere():
    assert oracle.local_conjugation_mismatches(P(2, 1)) == []
    assert oracle.local_conjugation_mismatches(P(2, 2))

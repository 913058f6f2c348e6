import itertools
from collections import Counter

import pytest
from hypothesis import given, settings

from conftest import tabloids
from nps_tableaux.engine import (
    ForwardSlide,
    check_invariance,
    decompose_slide,
    maximal_forward_slide,
    nps_decode,
    nps_encode,
    nps_sort,
    output_multiset,
)
from nps_tableaux.shapes import Cell, Partition, cell_order_from_tableau, partitions_up_to
from nps_tableaux.tableaux import FillingError, HookTableau, Tabloid, enumerate_hook_tableaux, enumerate_syt, enumerate_tabloids

T = Tabloid.parse
WORKED_TABLOID = "11,7,9,3;4,1,2,5;10,6,8"


def test_maximal_forward_slide():
    s = maximal_forward_slide(T("2,1;3"), (1, 1))
    assert s.cycle == (2, 1) and s.path == (Cell(1, 1), Cell(1, 2))
    assert maximal_forward_slide(T("1,2;3"), (1, 1)).length == 0
    s = maximal_forward_slide(T("3,2;1"), (1, 1))
    assert s.cycle == (3, 1) and s.path == (Cell(1, 1), Cell(2, 1))


def test_decompose_slide():
    assert decompose_slide((11, 1, 2, 3, 9)) == [(1, 11), (2, 11), (3, 11), (9, 11)]
    assert decompose_slide(ForwardSlide(Cell(1, 1), (4,), (Cell(1, 1),))) == []


def test_sort_examples():
    assert nps_sort(T("1,2;3")).total_exchanges == 0
    for text in ["2,1;3", "3,2;1"]:
        trace = nps_sort(T(text))
        assert trace.total_exchanges == 1
        assert str(trace.output) == "1,2;3"


def test_worked_example_443():
    # a (4,4,3) tabloid with four non-trivial slides, reconstructed from those slides
    trace = nps_sort(T(WORKED_TABLOID))
    nontrivial = [s.cycle for s in trace.slides if s.length]
    assert nontrivial == [(9, 2, 5), (7, 1, 5), (10, 6, 8), (11, 1, 2, 3, 9)]
    assert trace.total_exchanges == 10
    drop = {k: trace.intermediates[trace.input.position(k)].position(k) for k in (5, 9, 11)}
    assert set(drop.values()) == {Cell(2, 4)}
    partners = [s.cycle[0] for s in trace.slides if 1 in s.cycle[1:]]
    assert sorted(partners) == [7, 11]


def test_encode_examples():
    assert nps_encode(T("1,2;3")) == (HookTableau.zero(Partition((2, 1))), T("1,2;3"))
    h, u = nps_encode(T("2,1;3"))
    assert str(h) == "1,0;0" and str(u) == "1,2;3"
    h, u = nps_encode(T("3,2;1"))
    assert str(h) == "-1,0;0" and str(u) == "1,2;3"


def test_decode_examples():
    u = T("1,3;2")
    assert nps_decode(HookTableau.zero(u.shape), u) == u
    assert nps_decode(HookTableau.parse("1,0;0"), T("1,2;3")) == T("2,1;3")
    assert nps_decode(HookTableau.parse("-1,0;0"), T("1,3;2")) == T("2,3;1")
    with pytest.raises(FillingError):
        nps_decode(HookTableau.parse("1,0;0"), T("2,1;3"))


@settings(max_examples=300, deadline=None)
@given(tabloids(max_n=9))
def test_round_trip_random(t):
    h, u = nps_encode(t)
    assert u.is_standard()
    assert u == nps_sort(t).output
    assert nps_decode(h, u) == t


@pytest.mark.parametrize("lam", partitions_up_to(5, 1), ids=str)
def test_round_trips_exhaustive(lam):
    codes = set()
    for t in enumerate_tabloids(lam):
        h, u = nps_encode(t)
        codes.add((h, u))
        assert nps_decode(h, u) == t
    syt = list(enumerate_syt(lam))
    for h in enumerate_hook_tableaux(lam):
        for u in syt:
            assert (h, u) in codes
            assert nps_encode(nps_decode(h, u)) == (h, u)


@settings(max_examples=200, deadline=None)
@given(tabloids(max_n=9))
def test_trace_invariants(t):
    trace = nps_sort(t)
    order = trace.order
    assert [s.cell for s in trace.slides] == list(reversed(order.cells[:-1]))
    for s in trace.slides:
        assert list(s.cycle[1:]) == sorted(s.cycle[1:])
        if s.length:
            assert s.cycle[0] > s.cycle[-1]
        for a, b in zip(s.path, s.path[1:]):
            assert b in ((a.row, a.col + 1), (a.row + 1, a.col))
        after = trace.intermediates[s.cell]
        assert after.is_sorted_at(s.end)
        rank = order.rank(s.cell)
        assert all(after.is_sorted_at(c) for c in order.cells[rank:])
    assert trace.total_exchanges == sum(s.length for s in trace.slides)


def test_invariance_examples():
    assert check_invariance(T("3,1;2"), {2: 3, 3: 2}, 2)
    assert check_invariance(T("3,1;2"), [1, 2, 3], 3)
    with pytest.raises(ValueError):
        check_invariance(T("3,1;2"), {1: 2, 2: 1}, 2)
    lam_traces = {}
    for lam in partitions_up_to(4, 1):
        ts = list(enumerate_tabloids(lam))
        lam_traces = {t: nps_sort(t) for t in ts}
        for k in range(1, lam.n + 1):
            for a, b in itertools.combinations(range(k, lam.n + 1), 2):
                for t in ts:
                    assert check_invariance(t, {a: b, b: a}, k, traces=lam_traces)


def test_output_multiset():
    hist = output_multiset(Partition((2, 1)))
    assert hist == Counter({T("1,2;3"): 3, T("1,3;2"): 3})
    for u in enumerate_syt(Partition((2,))):
        assert output_multiset(Partition((2,)), cell_order_from_tableau(u)) == Counter({T("1,2"): 2})


def test_nonuniform_order_witness():
    lam = Partition((3, 3))
    hist = output_multiset(lam, cell_order_from_tableau(T("1,2,4;3,5,6")))
    assert sorted(hist.values()) == [136, 144, 144, 144, 152]
    assert set(output_multiset(lam).values()) == {lam.hook_product}

"""Brute-force statistics of the sorting algorithm, read off full sort traces.

Every function here sorts all ``n!`` tabloids of a shape; nothing uses the
closed formulas.  Results for a shape are cached after the first sweep.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import factorial
from .engine import SortTrace, nps_sort
from .shapes import Cell, Partition, neighbors
from .tableaux import Tabloid, enumerate_tabloids


@dataclass(frozen=True)
class ExchangeWitness:
    """One exchange of ``k`` with ``partner`` while sorting ``tabloid``.

    ``index`` is the 1-based chronological position among the exchanges of
    ``k`` with larger entries in that sort.
    """

    tabloid: Tabloid
    partner: int
    index: int


def drop_cell(trace: SortTrace, k: int) -> Cell:
    """Where ``k`` sits right after its own slide (``T_z`` with ``z = T^{-1}(k)``)."""
    z = trace.input.position(k)
    return trace.intermediates[z].position(k)


def sort_cost(t: Tabloid) -> tuple[int, dict[Cell, int]]:
    """``r(T)`` and the per-cell slide lengths ``r(T, x)`` (0 at the maximal cell)."""
    trace = nps_sort(t)
    per_cell = {c: 0 for c in t.shape.cells}
    for s in trace.slides:
        per_cell[s.cell] = s.length
    return sum(per_cell.values()), per_cell


def e_count(t: Tabloid, k: int, trace: SortTrace | None = None) -> int:
    """Number of exchanges of ``k`` with a larger entry during the sort of ``T``."""
    trace = trace or nps_sort(t)
    return sum(1 for s in trace.slides if k in s.cycle[1:])


@dataclass
class _Sweep:
    total_cost: int
    drop: dict[tuple[int, Cell], int]
    local: dict[tuple[int, int, Cell, Cell], int]
    pair: dict[tuple[int, int], int]


@lru_cache(maxsize=64)
def _sweep(parts: tuple[int, ...]) -> _Sweep:
    shape = Partition(parts)
    n = shape.n
    drop: dict[tuple[int, Cell], int] = defaultdict(int)
    local: dict[tuple[int, int, Cell, Cell], int] = defaultdict(int)
    pair: dict[tuple[int, int], int] = defaultdict(int)
    total = 0
    for t in enumerate_tabloids(shape):
        trace = nps_sort(t)
        total += trace.total_exchanges
        for k in range(1, n + 1):
            drop[k, drop_cell(trace, k)] += 1
        for s in trace.slides:
            l = t[s.cell]
            # local counts from positions before/after the slide, pair counts from the cycle
            before, after = trace.before(s.cell), trace.intermediates[s.cell]
            for k in range(1, l):
                x, y = before.position(k), after.position(k)
                if x != y:
                    local[k, l, x, y] += 1
            for k in s.cycle[1:]:
                pair[k, l] += 1
    return _Sweep(total, dict(drop), dict(local), dict(pair))


def complexity_bruteforce(shape: Partition) -> Fraction:
    """``C(λ)``: the average number of exchanges over all tabloids."""
    return Fraction(_sweep(shape.parts).total_cost, factorial(shape.n))


def total_exchanges(shape: Partition) -> int:
    """``Σ_T r(T)``, i.e. ``n! · C(λ)``."""
    return _sweep(shape.parts).total_cost


def drop_bruteforce(shape: Partition) -> dict[tuple[int, Cell], int]:
    """Dense table ``(k, x) -> d_λ(k, x)``."""
    raw = _sweep(shape.parts).drop
    return {(k, c): raw.get((k, c), 0) for k in range(1, shape.n + 1) for c in shape.cells}


def local_exchange_bruteforce(shape: Partition) -> dict[tuple[int, int, Cell, Cell], int]:
    """Table ``(k, l, x, y) -> ε_λ(k, l, x, y)`` over ``k < l`` and neighbouring ``x, y``.

    Counts tabloids where the slide of ``l`` moves ``k`` from ``x`` to ``y``.
    Entries for non-neighbouring cells are zero and are not stored.
    """
    raw = _sweep(shape.parts).local
    out = {}
    n = shape.n
    for x in shape.cells:
        minus, _ = neighbors(shape, x)
        for y in sorted(minus):
            for k in range(1, n + 1):
                for l in range(k + 1, n + 1):
                    out[k, l, x, y] = raw.get((k, l, x, y), 0)
    if any(key not in out for key in raw):
        raise AssertionError("exchange between non-neighbouring cells")
    return out


def local_exchange_numbers(shape: Partition) -> dict[tuple[int, Cell, Cell], int]:
    """``ε_λ(k, x, y) := ε_λ(k, n, x, y)``."""
    n = shape.n
    return {(k, x, y): v for (k, l, x, y), v in local_exchange_bruteforce(shape).items() if l == n}


def exchange_bruteforce(shape: Partition) -> dict[tuple[int, int], int]:
    """Table ``(k, l) -> ε_λ(k, l)`` for ``1 <= k < l <= n``."""
    raw = _sweep(shape.parts).pair
    n = shape.n
    return {(k, l): raw.get((k, l), 0) for k in range(1, n + 1) for l in range(k + 1, n + 1)}


def exchange_numbers(shape: Partition) -> dict[int, int]:
    """``ε_λ(k) := ε_λ(k, n)`` for ``1 <= k < n``."""
    table = exchange_bruteforce(shape)
    n = shape.n
    return {k: table[k, n] for k in range(1, n)}


def signed_exit_bruteforce(shape: Partition) -> dict[tuple[int, Cell], int]:
    """``Δ_λ(k, x)`` for ``1 <= k < n`` from the local exchange numbers."""
    local = local_exchange_numbers(shape)
    out = {}
    for k in range(1, shape.n):
        for x in shape.cells:
            minus, plus = neighbors(shape, x)
            out[k, x] = sum(local[k, x, y] for y in minus) - sum(local[k, y, x] for y in plus)
    return out


def exchange_set(shape: Partition, k: int) -> list[ExchangeWitness]:
    """``Ex(λ, k)`` in tabloid enumeration order, chronologically indexed per tabloid."""
    if not 1 <= k <= max(shape.n, 1):
        raise ValueError(f"k={k} out of range for shape {shape}")
    out = []
    for t in enumerate_tabloids(shape):
        out.extend(exchanges_of(nps_sort(t), k))
    return out


def exchanges_of(trace: SortTrace, k: int) -> list[ExchangeWitness]:
    """The exchanges of ``k`` with larger entries in one sort, in the order they happen."""
    out = []
    for s in trace.slides:
        if k in s.cycle[1:]:
            out.append(ExchangeWitness(trace.input, s.cycle[0], len(out) + 1))
    return out


@dataclass(frozen=True)
class StatTables:
    shape: Partition
    drop: dict[tuple[int, Cell], int]
    local_exchange: dict[tuple[int, Cell, Cell], int]
    exchange: dict[int, int]
    exit: dict[tuple[int, Cell], int]
    complexity: Fraction


def stat_tables(shape: Partition) -> StatTables:
    return StatTables(
        shape=shape,
        drop=drop_bruteforce(shape),
        local_exchange=local_exchange_numbers(shape),
        exchange=exchange_numbers(shape),
        exit=signed_exit_bruteforce(shape),
        complexity=complexity_bruteforce(shape),
    )


def local_conjugation_mismatches(shape: Partition) -> list[tuple[int, Cell, Cell, int, int]]:
    """All ``(k, x, y, ε_λ(k,x,y), ε_λ'(k,x',y'))`` where the two counts differ."""
    here = local_exchange_numbers(shape)
    there = local_exchange_numbers(shape.conjugate())
    out = []
    for (k, x, y), v in sorted(here.items()):
        w = there.get((k, x.conjugate(), y.conjugate()), 0)
        if v != w:
            out.append((k, x, y, v, w))
    return out

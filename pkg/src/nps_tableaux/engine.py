"""The Novelli-Pak-Stoyanovskii sorting algorithm and its hook-tableau encoding.

Cells are processed from the largest to the smallest with respect to a cell
order (column-major by default).  At each cell the entry performs a maximal
forward slide, always exchanging with the smaller of its right and bottom
neighbours while that neighbour is smaller than the sliding entry.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .shapes import Cell, CellOrder, Partition, cell_order
from .tableaux import FillingError, HookTableau, Tabloid, enumerate_tabloids

Exchange = tuple[int, int, Cell, Cell]


@dataclass(frozen=True)
class ForwardSlide:
    """A slide ``(k0, k1, ..., kr)`` started at ``cell``; ``path[i]`` is where ``ki`` sat."""

    cell: Cell
    cycle: tuple[int, ...]
    path: tuple[Cell, ...]

    @property
    def length(self) -> int:
        return len(self.cycle) - 1

    @property
    def end(self) -> Cell:
        return self.path[-1]

    def exchanges(self) -> list[Exchange]:
        """``(smaller, larger, from, to)`` for each exchange, in application order."""
        k0 = self.cycle[0]
        return [(self.cycle[i], k0, self.path[i], self.path[i - 1]) for i in range(1, len(self.cycle))]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.cycle)) + ")"


def decompose_slide(slide: ForwardSlide | Sequence[int]) -> list[tuple[int, int]]:
    """Split ``(k0, ..., kr)`` into the transpositions ``(k1,k0), ..., (kr,k0)``."""
    cycle = slide.cycle if isinstance(slide, ForwardSlide) else tuple(slide)
    return [(k, cycle[0]) for k in cycle[1:]]


def _slide_in_place(grid: list[list[int]], i: int, j: int) -> tuple[list[int], list[Cell]]:
    """Run the maximal forward slide at 0-based ``(i, j)`` on a mutable grid."""
    k0 = grid[i][j]
    cycle = [k0]
    path = [Cell(i + 1, j + 1)]
    nrows = len(grid)
    while True:
        row = grid[i]
        best = None
        bi = bj = 0
        if j + 1 < len(row):
            best, bi, bj = row[j + 1], i, j + 1
        if i + 1 < nrows and j < len(grid[i + 1]):
            v = grid[i + 1][j]
            if best is None or v < best:
                best, bi, bj = v, i + 1, j
        if best is None or best > k0:
            break
        row[j] = best
        grid[bi][bj] = k0
        i, j = bi, bj
        cycle.append(best)
        path.append(Cell(i + 1, j + 1))
    return cycle, path


def _freeze(grid: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r) for r in grid)


def _sorted_at(grid: Sequence[Sequence[int]], i: int, j: int) -> bool:
    v = grid[i][j]
    if j + 1 < len(grid[i]) and grid[i][j + 1] < v:
        return False
    if i + 1 < len(grid) and j < len(grid[i + 1]) and grid[i + 1][j] < v:
        return False
    return True


def maximal_forward_slide(t: Tabloid, x: Sequence[int]) -> ForwardSlide:
    """The maximal forward slide at ``x`` that always picks the smaller neighbour."""
    x = t.shape.check_cell(x)
    grid = [list(r) for r in t.rows]
    cycle, path = _slide_in_place(grid, x.row - 1, x.col - 1)
    return ForwardSlide(x, tuple(cycle), tuple(path))


@dataclass(frozen=True)
class SortTrace:
    """Complete record of one run of the sorting algorithm.

    ``intermediates[x]`` is the tabloid right after the slide at ``x``; the
    maximal cell is never slid and maps to the input.
    """

    input: Tabloid
    order: CellOrder
    slides: tuple[ForwardSlide, ...]
    intermediates: Mapping[Cell, Tabloid]
    output: Tabloid

    @property
    def exchanges(self) -> list[Exchange]:
        return [e for s in self.slides for e in s.exchanges()]

    @property
    def total_exchanges(self) -> int:
        return sum(s.length for s in self.slides)

    def slide_at(self, x: Sequence[int]) -> ForwardSlide | None:
        x = Cell(*x)
        for s in self.slides:
            if s.cell == x:
                return s
        return None

    def before(self, x: Sequence[int]) -> Tabloid:
        """The tabloid just before the slide at ``x`` (the state ``T_y`` for the successor ``y``)."""
        y = self.order.successor(x)
        return self.input if y is None else self.intermediates[y]


def nps_sort(t: Tabloid, order: CellOrder | None = None) -> SortTrace:
    shape = t.shape
    if order is None:
        order = cell_order(shape)
    elif order.shape != shape:
        raise FillingError(f"order is for shape {order.shape}, tabloid has shape {shape}")
    grid = [list(r) for r in t.rows]
    slides: list[ForwardSlide] = []
    intermediates: dict[Cell, Tabloid] = {}
    cells = order.cells
    if cells:
        intermediates[cells[-1]] = t
    for pos in range(len(cells) - 2, -1, -1):
        x = cells[pos]
        cycle, path = _slide_in_place(grid, x.row - 1, x.col - 1)
        slides.append(ForwardSlide(x, tuple(cycle), tuple(path)))
        assert all(_sorted_at(grid, c.row - 1, c.col - 1) for c in cells[pos:]), (
            f"not sorted above {x} while sorting {t}"
        )
        intermediates[x] = Tabloid._trusted(_freeze(grid), shape)
    output = intermediates[cells[0]] if cells else t
    return SortTrace(t, order, tuple(slides), intermediates, output)


def _record_hooks(shape: Partition, slides: Iterable[ForwardSlide]) -> list[list[int]]:
    hooks = [[0] * p for p in shape.parts]
    for s in slides:
        a, b = s.cell.row - 1, s.cell.col - 1
        a2, b2 = s.end.row - 1, s.end.col - 1
        for i in range(a, a2):
            hooks[i][b] = hooks[i + 1][b] - 1
        hooks[a2][b] = b2 - b
    return hooks


def nps_encode(t: Tabloid) -> tuple[HookTableau, Tabloid]:
    """The pair ``(H, U)``: hook tableau and the sorted output under the column-major order.

    When the slide at ``(a, b)`` ends at ``(a', b')`` the hook column ``b`` is
    updated by ``H(i, b) <- H(i+1, b) - 1`` for ``a <= i < a'`` and then
    ``H(a', b) <- b' - b``.
    """
    trace = nps_sort(t)
    hooks = _record_hooks(t.shape, trace.slides)
    return HookTableau._trusted(_freeze(hooks), t.shape), trace.output


def _in_region(r: int, c: int, a: int, b: int) -> bool:
    return c > b or (c == b and r >= a)


def _backward_path(grid: list[list[int]], start: tuple[int, int], a: int, b: int) -> list[tuple[int, int]] | None:
    """Backward slide from ``start`` to ``(a, b)`` inside the region of cells >= ``(a, b)``.

    The moving entry swaps with the larger of its top and left neighbours in
    the region; ``grid`` is modified in place.  Returns the visited cells, or
    ``None`` if the slide gets stuck before reaching ``(a, b)``.
    """
    r, c = start
    path = [(r, c)]
    while (r, c) != (a, b):
        best = None
        if r > 0 and _in_region(r - 1, c, a, b):
            best = (r - 1, c)
        if c > 0 and _in_region(r, c - 1, a, b):
            if best is None or grid[r][c - 1] > grid[best[0]][best[1]]:
                best = (r, c - 1)
        if best is None:
            return None
        br, bc = best
        grid[r][c], grid[br][bc] = grid[br][bc], grid[r][c]
        r, c = br, bc
        path.append((r, c))
    return path


def _undo_step(
    shape: Partition, grid: list[list[int]], hooks: list[list[int]], a: int, b: int
) -> tuple[list[list[int]], list[list[int]]]:
    """Invert the slide at 0-based ``(a, b)`` given the state right after it.

    Candidate end cells are ``(r, b + H(r, b))`` for the rows ``r >= a`` of
    column ``b`` with ``H(r, b) >= 0``.  They are scanned top to bottom; a
    candidate replaces the current choice when its backward path enters the
    row of the current choice strictly to the right of the current choice.
    """
    col_len = shape.col_length(b + 1)
    choice: tuple[int, int] | None = None
    choice_grid: list[list[int]] = []
    for r in range(a, col_len):
        h = hooks[r][b]
        if h < 0:
            continue
        before = [list(row) for row in grid]
        path = _backward_path(before, (r, b + h), a, b)
        if path is None:
            continue
        if choice is not None:
            entry_col = next(c for pr, c in path if pr == choice[0])
            if entry_col <= choice[1]:
                continue
        choice, choice_grid = (r, b + h), before
    if choice is None:
        raise FillingError(f"no admissible backward slide at cell ({a + 1},{b + 1})")
    replay = [list(row) for row in choice_grid]
    _, fwd = _slide_in_place(replay, a, b)
    if fwd[-1] != Cell(choice[0] + 1, choice[1] + 1) or replay != grid:
        raise FillingError(f"backward slide at cell ({a + 1},{b + 1}) does not invert")
    old_hooks = [list(row) for row in hooks]
    old_hooks[a][b] = 0
    for i in range(a + 1, choice[0] + 1):
        old_hooks[i][b] = hooks[i - 1][b] + 1
    return choice_grid, old_hooks


def nps_decode(h: HookTableau, u: Tabloid) -> Tabloid:
    """The unique tabloid ``T`` with ``nps_encode(T) == (h, u)``.

    Cells are restored in increasing column-major order, undoing one slide
    per cell (see :func:`_undo_step` for how the backward slide is chosen).
    """
    if h.shape != u.shape:
        raise FillingError(f"hook tableau shape {h.shape} differs from tableau shape {u.shape}")
    if not u.is_standard():
        raise FillingError(f"not a standard Young tableau: {u}")
    shape = u.shape
    grid = [list(r) for r in u.rows]
    hooks = [list(r) for r in h.rows]
    order = cell_order(shape)
    for x in order.cells[:-1]:
        grid, hooks = _undo_step(shape, grid, hooks, x.row - 1, x.col - 1)
    if any(v for r in hooks for v in r):
        raise FillingError(f"hook tableau {h} did not reduce to zero")
    return Tabloid._trusted(_freeze(grid), shape)


def _as_mapping(perm: Mapping[int, int] | Sequence[int], n: int) -> dict[int, int]:
    if isinstance(perm, Mapping):
        mapping = {v: perm.get(v, v) for v in range(1, n + 1)}
    else:
        if len(perm) != n:
            raise ValueError(f"permutation must have length {n}")
        mapping = {v: perm[v - 1] for v in range(1, n + 1)}
    if sorted(mapping.values()) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..n")
    return mapping


def check_invariance(
    t: Tabloid,
    perm: Mapping[int, int] | Sequence[int],
    k: int,
    order: CellOrder | None = None,
    traces: Mapping[Tabloid, SortTrace] | None = None,
) -> bool:
    """Whether the sorts of ``T`` and ``π ∘ T`` keep every entry ``< k`` in the same place.

    ``perm`` is a value map (or one-line notation) that must fix ``1..k-1``.
    ``traces`` optionally supplies precomputed sort traces keyed by tabloid.
    """
    mapping = _as_mapping(perm, t.shape.n)
    if any(mapping[v] != v for v in range(1, k)):
        raise ValueError(f"permutation does not fix 1..{k - 1}")
    other = t.relabel(mapping)
    if traces is not None:
        ta, tb = traces[t], traces[other]
    else:
        ta, tb = nps_sort(t, order), nps_sort(other, order)
    for x, tx in ta.intermediates.items():
        ux = tb.intermediates[x]
        for v in range(1, k):
            if tx.position(v) != ux.position(v):
                return False
    return True


def output_multiset(shape: Partition, order: CellOrder | None = None) -> Counter[Tabloid]:
    """How often each standard Young tableau is produced when sorting all tabloids."""
    return Counter(nps_sort(t, order).output for t in enumerate_tabloids(shape))

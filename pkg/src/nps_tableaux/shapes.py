"""Partitions, cells and the cell orders used by the sorting engine.

Cells are 1-based ``(row, col)`` pairs in matrix orientation: row 1 is the
top row and rows are left-justified.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Iterator, NamedTuple, Sequence

if TYPE_CHECKING:
    from .tableaux import Tabloid


class ShapeError(ValueError):
    """Raised for malformed partitions or cells outside a shape."""


class Cell(NamedTuple):
    row: int
    col: int

    def conjugate(self) -> Cell:
        return Cell(self.col, self.row)

    def __str__(self) -> str:
        return f"{self.row},{self.col}"


@dataclass(frozen=True)
class Partition:
    """An integer partition, stored as its weakly decreasing positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ShapeError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeError(f"parts must be weakly decreasing: {parts}")

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __contains__(self, cell: object) -> bool:
        if not isinstance(cell, tuple) or len(cell) != 2:
            return False
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    @cached_property
    def n(self) -> int:
        return sum(self.parts)

    def row_length(self, i: int) -> int:
        """``λ_i`` with the convention ``λ_i = 0`` past the last part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col_length(self, j: int) -> int:
        return self.conjugate().row_length(j)

    def conjugate(self) -> Partition:
        return _conjugate(self)

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """All cells in row-major reading order."""
        return tuple(Cell(i + 1, j + 1) for i, p in enumerate(self.parts) for j in range(p))

    def check_cell(self, cell: Sequence[int]) -> Cell:
        cell = Cell(*cell)
        if cell not in self:
            raise ShapeError(f"cell {tuple(cell)} is not in shape {self.parts}")
        return cell

    def arm(self, cell: Sequence[int]) -> int:
        i, j = self.check_cell(cell)
        return self.parts[i - 1] - j

    def leg(self, cell: Sequence[int]) -> int:
        i, j = self.check_cell(cell)
        return self.col_length(j) - i

    def hook(self, cell: Sequence[int]) -> int:
        return self.arm(cell) + self.leg(cell) + 1

    @cached_property
    def hook_product(self) -> int:
        out = 1
        for c in self.cells:
            out *= self.hook(c)
        return out

    def contains(self, other: Partition) -> bool:
        """Whether ``other ⊆ self`` as diagrams."""
        return len(other) <= len(self) and all(
            m <= p for m, p in zip(other.parts, self.parts)
        )


# Conjugation is called in hot loops; cache it per distinct shape.
_CONJ_CACHE: dict[tuple[int, ...], Partition] = {}


def _conjugate(lam: Partition) -> Partition:
    try:
        return _CONJ_CACHE[lam.parts]
    except KeyError:
        pass
    first = lam.parts[0] if lam.parts else 0
    conj = Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, first + 1)))
    _CONJ_CACHE[lam.parts] = conj
    return conj


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def cohook(cell: Sequence[int]) -> int:
    """Distance ``i + j - 2`` from the corner cell ``(1, 1)``."""
    i, j = cell
    return i + j - 2


def cell_stats(lam: Partition, cell: Sequence[int]) -> tuple[int, int, int, int]:
    """Return ``(arm, leg, hook, cohook)`` of ``cell`` in ``lam``."""
    arm, leg = lam.arm(cell), lam.leg(cell)
    return arm, leg, arm + leg + 1, cohook(cell)


def neighbors(lam: Partition, cell: Sequence[int]) -> tuple[frozenset[Cell], frozenset[Cell]]:
    """Top/left and right/bottom neighbours of ``cell`` inside ``lam``."""
    i, j = lam.check_cell(cell)
    minus = frozenset(c for c in (Cell(i - 1, j), Cell(i, j - 1)) if c in lam)
    plus = frozenset(c for c in (Cell(i, j + 1), Cell(i + 1, j)) if c in lam)
    return minus, plus


class CellOrder:
    """A total order on the cells of a shape.

    ``cells`` lists the cells from smallest to largest.  The default order is
    column-major: ``(i, j) < (k, l)`` iff ``j < l``, or ``j == l`` and ``i < k``.
    """

    def __init__(self, shape: Partition, cells: Iterable[Sequence[int]] | None = None, name: str = "colmajor"):
        self.shape = shape
        if cells is None:
            cells = sorted(shape.cells, key=lambda c: (c[1], c[0]))
        self.cells: tuple[Cell, ...] = tuple(Cell(*c) for c in cells)
        if sorted(self.cells) != sorted(shape.cells):
            raise ShapeError("order must list every cell of the shape exactly once")
        self.name = name
        self._rank = {c: r for r, c in enumerate(self.cells)}

    def __repr__(self) -> str:
        return f"CellOrder({self.shape!r}, name={self.name!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CellOrder) and self.shape == other.shape and self.cells == other.cells

    def __hash__(self) -> int:
        return hash((self.shape, self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def rank(self, cell: Sequence[int]) -> int:
        """0-based position of ``cell`` in the order."""
        return self._rank[Cell(*cell)]

    def less(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return self.rank(x) < self.rank(y)

    @property
    def max_cell(self) -> Cell | None:
        return self.cells[-1] if self.cells else None

    @property
    def min_cell(self) -> Cell | None:
        return self.cells[0] if self.cells else None

    def successor(self, cell: Sequence[int]) -> Cell | None:
        r = self.rank(cell)
        return self.cells[r + 1] if r + 1 < len(self.cells) else None

    def precursor(self, cell: Sequence[int]) -> Cell | None:
        r = self.rank(cell)
        return self.cells[r - 1] if r > 0 else None


def cell_order(lam: Partition) -> CellOrder:
    return CellOrder(lam)


def cell_order_from_tableau(tableau: Tabloid) -> CellOrder:
    """The order ``x < y`` iff ``U(x) < U(y)`` for a standard Young tableau ``U``."""
    if not tableau.is_standard():
        raise ShapeError(f"not a standard Young tableau: {tableau}")
    cells = sorted(tableau.shape.cells, key=lambda c: tableau[c])
    return CellOrder(tableau.shape, cells, name=f"tableau:{tableau}")


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n)]


def partitions_up_to(max_n: int, min_n: int = 0) -> list[Partition]:
    return [lam for n in range(min_n, max_n + 1) for lam in partitions_of(n)]


def subpartitions(lam: Partition) -> list[Partition]:
    """Every ``μ ⊆ λ``, including the empty partition and ``λ`` itself.

    Ordered by size, then lexicographically descending within a size.
    """
    out: list[tuple[int, ...]] = []

    def gen(i: int, bound: int, prefix: tuple[int, ...]) -> None:
        out.append(prefix)
        if i >= len(lam.parts):
            return
        for p in range(1, min(bound, lam.parts[i]) + 1):
            gen(i + 1, p, prefix + (p,))

    gen(0, lam.parts[0] if lam.parts else 0, ())
    out.sort(key=lambda p: (sum(p), tuple(-x for x in p)))
    return [Partition(p) for p in out]


def parse_partition(text: str) -> Partition:
    """Parse ``"4,4,3"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"malformed partition {text!r}") from exc
    return Partition(parts)


def parse_cell(text: str) -> Cell:
    try:
        i, j = (int(t) for t in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"malformed cell {text!r}; expected 'i,j'") from exc
    return Cell(i, j)

"""Fillings of Young diagrams and the counts attached to them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Literal, Mapping, Sequence

from .arith import det_rational, exact_div, factorial, inv_factorial
from .shapes import Cell, Partition, ShapeError, subpartitions


class GridError(ValueError):
    """A grid string could not be parsed."""


class FillingError(ValueError):
    """A filling violates the constraints of its type."""


Grid = tuple[tuple[int, ...], ...]


def parse_grid(text: str) -> Grid:
    """Parse ``"2,1;3"`` into ``((2, 1), (3,))``.  The empty string is the empty grid."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(tuple(int(v) for v in row.split(",")) for row in text.split(";"))
    except ValueError as exc:
        raise GridError(f"malformed grid {text!r}") from exc


def format_grid(rows: Sequence[Sequence[int]]) -> str:
    return ";".join(",".join(str(v) for v in row) for row in rows)


def pretty_grid(rows: Sequence[Sequence[int]]) -> str:
    """Right-aligned rows, one per line, for human-readable output."""
    width = max((len(str(v)) for row in rows for v in row), default=1)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in rows)


def _shape_of(rows: Grid) -> Partition:
    try:
        return Partition(tuple(len(r) for r in rows))
    except ShapeError as exc:
        raise FillingError(f"rows do not form a partition shape: {format_grid(rows)!r}") from exc


@dataclass(frozen=True)
class Tabloid:
    """A bijective filling of a shape with ``1..n``.

    Standard Young tableaux are tabloids for which :meth:`is_standard` holds.
    """

    rows: Grid
    shape: Partition = field(default=None, compare=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = _shape_of(rows)
        if self.shape is not None and Partition(tuple(self.shape)) != shape:
            raise FillingError(f"grid {format_grid(rows)!r} does not have shape {self.shape}")
        object.__setattr__(self, "shape", shape)
        if sorted(v for r in rows for v in r) != list(range(1, shape.n + 1)):
            raise FillingError(f"entries not a bijection onto 1..{shape.n}: {format_grid(rows)!r}")

    @classmethod
    def _trusted(cls, rows: Grid, shape: Partition) -> Tabloid:
        """Build without validation; callers guarantee ``rows`` is a tabloid of ``shape``."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "shape", shape)
        return obj

    @classmethod
    def parse(cls, text: str, shape: Partition | None = None) -> Tabloid:
        return cls(parse_grid(text), shape)

    @classmethod
    def standard(cls, rows: Grid | str, shape: Partition | None = None) -> Tabloid:
        """Build a tabloid and insist that it is a standard Young tableau."""
        t = cls.parse(rows, shape) if isinstance(rows, str) else cls(rows, shape)
        if not t.is_standard():
            raise FillingError(f"not a standard Young tableau: {t}")
        return t

    def __str__(self) -> str:
        return format_grid(self.rows)

    def __repr__(self) -> str:
        return f"Tabloid({str(self)!r})"

    def __getitem__(self, cell: Sequence[int]) -> int:
        i, j = cell
        if i < 1 or j < 1:
            raise IndexError(cell)
        return self.rows[i - 1][j - 1]

    @cached_property
    def positions(self) -> dict[int, Cell]:
        return {v: Cell(i + 1, j + 1) for i, r in enumerate(self.rows) for j, v in enumerate(r)}

    def position(self, value: int) -> Cell:
        """The cell ``T^{-1}(value)``."""
        return self.positions[value]

    def is_sorted_at(self, cell: Sequence[int]) -> bool:
        i, j = cell[0] - 1, cell[1] - 1
        v = self.rows[i][j]
        if j + 1 < len(self.rows[i]) and self.rows[i][j + 1] < v:
            return False
        if i + 1 < len(self.rows) and j < len(self.rows[i + 1]) and self.rows[i + 1][j] < v:
            return False
        return True

    def is_standard(self) -> bool:
        return all(self.is_sorted_at(c) for c in self.shape.cells)

    def conjugate(self) -> Tabloid:
        """``T'(x') = T(x)`` on the conjugate shape."""
        return Tabloid._trusted(_transpose(self.rows), self.shape.conjugate())

    def relabel(self, perm: Mapping[int, int]) -> Tabloid:
        """Return ``π ∘ T`` for a permutation given as a value mapping (missing keys are fixed)."""
        rows = tuple(tuple(perm.get(v, v) for v in r) for r in self.rows)
        return Tabloid(rows, self.shape)

    def swap_values(self, k: int, l: int) -> Tabloid:
        """Return ``(k l) ∘ T``."""
        if k == l:
            return self
        sw = {k: l, l: k}
        rows = tuple(tuple(sw.get(v, v) for v in r) for r in self.rows)
        return Tabloid._trusted(rows, self.shape)

    def to_grid(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


StandardYoungTableau = Tabloid


@dataclass(frozen=True)
class HookTableau:
    """Integers on a shape with ``-leg(x) <= H(x) <= arm(x)`` at every cell."""

    rows: Grid
    shape: Partition = field(default=None, compare=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = _shape_of(rows)
        if self.shape is not None and Partition(tuple(self.shape)) != shape:
            raise FillingError(f"grid {format_grid(rows)!r} does not have shape {self.shape}")
        object.__setattr__(self, "shape", shape)
        for c in shape.cells:
            v = rows[c.row - 1][c.col - 1]
            if not -shape.leg(c) <= v <= shape.arm(c):
                raise FillingError(
                    f"hook value {v} at cell ({c}) outside [{-shape.leg(c)}, {shape.arm(c)}]"
                )

    @classmethod
    def _trusted(cls, rows: Grid, shape: Partition) -> HookTableau:
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "shape", shape)
        return obj

    @classmethod
    def parse(cls, text: str, shape: Partition | None = None) -> HookTableau:
        return cls(parse_grid(text), shape)

    @classmethod
    def zero(cls, shape: Partition) -> HookTableau:
        return cls._trusted(tuple((0,) * p for p in shape.parts), shape)

    def __str__(self) -> str:
        return format_grid(self.rows)

    def __repr__(self) -> str:
        return f"HookTableau({str(self)!r})"

    def __getitem__(self, cell: Sequence[int]) -> int:
        i, j = cell
        if i < 1 or j < 1:
            raise IndexError(cell)
        return self.rows[i - 1][j - 1]

    def conjugate(self) -> HookTableau:
        """``H'(x') = -H(x)`` on the conjugate shape."""
        rows = tuple(tuple(-v for v in r) for r in _transpose(self.rows))
        return HookTableau._trusted(rows, self.shape.conjugate())

    def to_grid(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _transpose(rows: Grid) -> Grid:
    if not rows:
        return ()
    return tuple(
        tuple(rows[i][j] for i in range(len(rows)) if j < len(rows[i])) for j in range(len(rows[0]))
    )


def conjugate_tabloid(t: Tabloid) -> Tabloid:
    return t.conjugate()


def conjugate_hook(h: HookTableau) -> HookTableau:
    return h.conjugate()


def _fill(shape: Partition, values: Sequence[int]) -> Grid:
    rows = []
    pos = 0
    for p in shape.parts:
        rows.append(tuple(values[pos:pos + p]))
        pos += p
    return tuple(rows)


def enumerate_tabloids(shape: Partition) -> Iterator[Tabloid]:
    """All ``n!`` tabloids, filling cells in row-major order from the permutations of ``1..n``."""
    for perm in itertools.permutations(range(1, shape.n + 1)):
        yield Tabloid._trusted(_fill(shape, perm), shape)


def _addable_rows(current: list[int], target: Sequence[int]) -> Iterator[int]:
    """Rows ``i`` where a cell can be appended to ``current`` while staying inside ``target``."""
    for i, limit in enumerate(target):
        if current[i] < limit and (i == 0 or current[i - 1] > current[i]):
            yield i


def _standard_fillings(outer: Partition, inner: Sequence[int] = ()) -> Iterator[list[list[int]]]:
    """Standard fillings of ``outer / inner`` with ``1..m``; inner cells hold 0."""
    target = outer.parts
    current = [inner[i] if i < len(inner) else 0 for i in range(len(target))]
    grid = [[0] * p for p in target]
    m = outer.n - sum(inner)

    def rec(value: int) -> Iterator[list[list[int]]]:
        if value > m:
            yield grid
            return
        for i in _addable_rows(current, target):
            grid[i][current[i]] = value
            current[i] += 1
            yield from rec(value + 1)
            current[i] -= 1
            grid[i][current[i]] = 0

    yield from rec(1)


def enumerate_syt(shape: Partition) -> Iterator[Tabloid]:
    """Every standard Young tableau, built by placing ``1..n`` at addable corners."""
    for grid in _standard_fillings(shape):
        yield Tabloid._trusted(tuple(tuple(r) for r in grid), shape)


def enumerate_hook_tableaux(shape: Partition) -> Iterator[HookTableau]:
    cells = shape.cells
    ranges = [range(-shape.leg(c), shape.arm(c) + 1) for c in cells]
    for values in itertools.product(*ranges):
        yield HookTableau._trusted(_fill(shape, values), shape)


@lru_cache(maxsize=None)
def _hlf(parts: tuple[int, ...]) -> int:
    shape = Partition(parts)
    return exact_div(factorial(shape.n), shape.hook_product)


def hook_length_formula(shape: Partition) -> int:
    """``f_λ = n! / ∏ h(x)``."""
    return _hlf(shape.parts)


def skew_syt_count(outer: Partition, inner: Partition) -> int:
    """Number of standard fillings of ``outer / inner`` by Aitken's determinant.

    ``m! · det[1 / ((λ_i - i) - (μ_j - j))!]`` over an ``r × r`` matrix,
    ``r`` the number of parts of ``outer`` and ``inner`` padded with zeros.
    """
    if not outer.contains(inner):
        raise ShapeError(f"{inner} is not contained in {outer}")
    r = len(outer)
    lam = outer.parts
    mu = inner.parts + (0,) * (r - len(inner))
    matrix = [[inv_factorial((lam[i] - i) - (mu[j] - j)) for j in range(r)] for i in range(r)]
    value = det_rational(matrix) * factorial(outer.n - inner.n)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral skew count {value}")
    return value.numerator


def skew_syt_bruteforce(outer: Partition, inner: Partition) -> int:
    """Count standard fillings of ``outer / inner`` by direct enumeration."""
    if not outer.contains(inner):
        raise ShapeError(f"{inner} is not contained in {outer}")
    return sum(1 for _ in _standard_fillings(outer, inner.parts))


@dataclass(frozen=True)
class FCensus:
    """The table ``f_λ(k, x) = #{U ∈ SYT(λ) : U(x) = k}`` (dense, zero-filled)."""

    shape: Partition
    table: dict[tuple[int, Cell], int]
    total: int

    def __getitem__(self, key: tuple[int, Sequence[int]]) -> int:
        k, x = key
        return self.table.get((k, Cell(*x)), 0)

    def column(self, x: Sequence[int]) -> list[int]:
        """``[f(1, x), ..., f(n, x)]``."""
        return [self[k, x] for k in range(1, self.shape.n + 1)]


def f_census(shape: Partition, backend: Literal["enumeration", "determinant"] = "enumeration") -> FCensus:
    """Tabulate ``f_λ(k, x)`` by enumerating SYT or by sub-partition/Aitken counting."""
    return _f_census(shape.parts, backend)


@lru_cache(maxsize=256)
def _f_census(parts: tuple[int, ...], backend: str) -> FCensus:
    shape = Partition(parts)
    n = shape.n
    table = {(k, c): 0 for k in range(1, n + 1) for c in shape.cells}
    if backend == "enumeration":
        total = 0
        for t in enumerate_syt(shape):
            total += 1
            for c in shape.cells:
                table[t[c], c] += 1
    elif backend == "determinant":
        total = hook_length_formula(shape)
        for mu in subpartitions(shape):
            k = mu.n + 1
            if k > n:
                continue
            f_mu = hook_length_formula(mu)
            padded = list(mu.parts) + [0]
            for i in range(len(padded)):
                row = i + 1
                col = padded[i] + 1
                if col > shape.row_length(row):
                    continue
                if i > 0 and padded[i - 1] < col:
                    continue
                grown = list(padded)
                grown[i] += 1
                bigger = Partition(tuple(p for p in grown if p))
                table[k, Cell(row, col)] += f_mu * skew_syt_count(shape, bigger)
    else:
        raise ValueError(f"unknown census backend {backend!r}")
    return FCensus(shape, table, total)

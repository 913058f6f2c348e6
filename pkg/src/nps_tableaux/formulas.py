"""Closed formulas for the drop function, exchange numbers, signed exit
numbers and complexity, evaluated exactly from the ``f_λ(k, x)`` census.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal, Mapping

from .arith import as_integer, binomial, factorial, format_rational, harmonic
from .shapes import Cell, Partition, cohook
from .tableaux import FCensus, f_census

Backend = Literal["enumeration", "determinant"]
Comp2Variant = Literal["corrected", "paper"]


@dataclass(frozen=True)
class FormulaReport:
    """An exact comparison of a formula value against a reference value."""

    shape: Partition
    formula: str
    lhs: Any
    rhs: Any

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict[str, Any]:
        return {
            "shape": str(self.shape),
            "formula": self.formula,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "equal": self.equal,
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Mapping):
        return {_key(k): _jsonable(v) for k, v in value.items()}
    return value


def _key(key: Any) -> str:
    if isinstance(key, tuple):
        return "|".join(str(part) for part in key)
    return str(key)


def _census(shape: Partition, census: FCensus | None, backend: Backend) -> FCensus:
    return census if census is not None else f_census(shape, backend)


def _ratio(census: FCensus, k: int, x: Cell) -> Fraction:
    return Fraction(census[k, x], census.total)


def _check_k(shape: Partition, k: int, upper: int) -> None:
    if not 1 <= k <= upper:
        raise ValueError(f"k={k} outside 1..{upper} for shape {shape}")


def delta_formula(
    shape: Partition, k: int, x: Cell, census: FCensus | None = None, backend: Backend = "enumeration"
) -> int:
    """Signed exit number ``Δ_λ(k, x)`` in closed form (requires ``k < n``)."""
    n = shape.n
    _check_k(shape, k, n - 1)
    x = shape.check_cell(x)
    c = _census(shape, census, backend)
    partial = sum((_ratio(c, l, x) for l in range(1, k)), Fraction(0))
    value = Fraction(factorial(n), (n - k) * (n - k + 1)) * (1 - _ratio(c, k, x) * (n - k + 1) - partial)
    return as_integer(value)


def delta_recursion_check(
    shape: Partition, k: int, x: Cell, census: FCensus | None = None, backend: Backend = "enumeration"
) -> bool:
    """``(n-k) Δ(k,x) = (n-1)! - n! f(k,x)/f + Σ_{l<k} Δ(l,x)`` on formula values."""
    n = shape.n
    c = _census(shape, census, backend)
    lhs = (n - k) * delta_formula(shape, k, x, c)
    rhs = (
        factorial(n - 1)
        - factorial(n) * _ratio(c, k, x)
        + sum(delta_formula(shape, l, x, c) for l in range(1, k))
    )
    return lhs == rhs


def drop_formula(
    shape: Partition,
    k: int,
    x: Cell,
    variant: Literal["harmonic-free", "hook-product"] = "harmonic-free",
    census: FCensus | None = None,
    backend: Backend = "enumeration",
) -> int:
    """Drop function ``d_λ(k, x)``.

    ``harmonic-free``: ``n!/(n-k+1) · (1 - Σ_{l<k} f(l,x)/f)``.
    ``hook-product``: ``∏h/(n-k+1) · Σ_{l>=k} f(l,x)``.
    """
    n = shape.n
    _check_k(shape, k, n)
    x = shape.check_cell(x)
    c = _census(shape, census, backend)
    if variant == "harmonic-free":
        partial = sum((_ratio(c, l, x) for l in range(1, k)), Fraction(0))
        value = Fraction(factorial(n), n - k + 1) * (1 - partial)
    elif variant == "hook-product":
        value = Fraction(shape.hook_product, n - k + 1) * sum(c[l, x] for l in range(k, n + 1))
    else:
        raise ValueError(f"unknown drop variant {variant!r}")
    return as_integer(value)


def drop_recursion_check(shape: Partition, k: int, x: Cell, census: FCensus | None = None) -> bool:
    """``d(k,x) = (n-1)! + Σ_{l<k} Δ(l,x)``, and ``= (n-k)Δ(k,x) + n! f(k,x)/f`` when ``k < n``."""
    n = shape.n
    c = _census(shape, census, "enumeration")
    d = drop_formula(shape, k, x, census=c)
    ok = d == factorial(n - 1) + sum(delta_formula(shape, l, x, c) for l in range(1, k))
    if k < n:
        ok = ok and d == (n - k) * delta_formula(shape, k, x, c) + factorial(n) * _ratio(c, k, x)
    return ok


def exchange_formula(
    shape: Partition, k: int, census: FCensus | None = None, backend: Backend = "enumeration"
) -> int:
    """``ε_λ(k)`` in closed form (requires ``k < n``)."""
    n = shape.n
    _check_k(shape, k, n - 1)
    c = _census(shape, census, backend)
    total = Fraction(0)
    for x in shape.cells:
        partial = sum((_ratio(c, l, x) for l in range(1, k)), Fraction(0))
        total += cohook(x) * (1 - _ratio(c, k, x) * (n - k + 1) - partial)
    return as_integer(Fraction(factorial(n), (n - k) * (n - k + 1)) * total)


def exchange_recursion_check(shape: Partition, k: int, census: FCensus | None = None) -> bool:
    """``(n-k) ε(k) = (n-1)! Σh' + Σ_{l<k} ε(l) - n!/f Σ h'(x) f(k,x)``."""
    n = shape.n
    c = _census(shape, census, "enumeration")
    lhs = (n - k) * exchange_formula(shape, k, c)
    cohook_sum = sum(cohook(x) for x in shape.cells)
    rhs = (
        factorial(n - 1) * cohook_sum
        + sum(exchange_formula(shape, l, c) for l in range(1, k))
        - Fraction(factorial(n), c.total) * sum(cohook(x) * c[k, x] for x in shape.cells)
    )
    return lhs == rhs


def exchange_from_exit(shape: Partition, k: int, census: FCensus | None = None) -> int:
    """``Σ_x h'(x) Δ(k, x)`` on formula values."""
    c = _census(shape, census, "enumeration")
    return sum(cohook(x) * delta_formula(shape, k, x, c) for x in shape.cells)


def cohook_sum_binomial(shape: Partition) -> int:
    """``Σ_i C(λ_i, 2) + Σ_i C(λ'_i, 2)``, which equals ``Σ_x h'(x)``."""
    return sum(binomial(p, 2) for p in shape.parts) + sum(binomial(p, 2) for p in shape.conjugate().parts)


def complexity_formula(
    shape: Partition,
    variant: Literal["comp1", "comp2-corrected", "comp2-paper"] = "comp1",
    census: FCensus | None = None,
    backend: Backend = "enumeration",
) -> Fraction:
    """Complexity ``C(λ)`` from harmonic numbers and the census.

    ``comp2-paper`` keeps the printed upper limit ``n-1`` in the second form;
    it disagrees with the other two already for ``λ = (2)``.
    """
    n = shape.n
    if n == 0:
        return Fraction(0)
    c = _census(shape, census, backend)
    h_n = harmonic(n)
    if variant == "comp1":
        tail = sum(
            (cohook(x) * _ratio(c, k, x) * harmonic(n - k) for x in shape.cells for k in range(1, n)),
            Fraction(0),
        )
        return cohook_sum_binomial(shape) * (h_n - 1) - tail
    if variant in ("comp2-corrected", "comp2-paper"):
        upper = n if variant == "comp2-corrected" else n - 1
        return sum(
            (
                cohook(x) * _ratio(c, k, x) * (h_n - harmonic(n - k) - 1)
                for x in shape.cells
                for k in range(1, upper + 1)
            ),
            Fraction(0),
        )
    raise ValueError(f"unknown complexity variant {variant!r}")


def complexity_from_exchanges(shape: Partition, exchange: Mapping[int, int]) -> Fraction:
    """``C = 1/n! Σ_k (n-k) ε(k)``."""
    n = shape.n
    return Fraction(sum((n - k) * exchange[k] for k in range(1, n)), factorial(n)) if n else Fraction(0)


def complexity_from_drops(
    shape: Partition,
    drop: Mapping[tuple[int, Cell], int],
    against: Literal["sumd1", "sumd2"] = "sumd1",
    census: FCensus | None = None,
) -> Fraction:
    """``C`` from the drop table, counting exchanges with smaller (``sumd1``) or larger (``sumd2``) entries."""
    n = shape.n
    if n == 0:
        return Fraction(0)
    c = _census(shape, census, "enumeration")
    total = Fraction(0)
    for x in shape.cells:
        for k in range(1, n + 1):
            base = factorial(n - 1) if against == "sumd1" else factorial(n) * _ratio(c, k, x)
            total += cohook(x) * (drop[k, x] - base)
    return total / factorial(n)


def drop_table(shape: Partition, census: FCensus | None = None) -> dict[tuple[int, Cell], int]:
    c = _census(shape, census, "enumeration")
    return {(k, x): drop_formula(shape, k, x, census=c) for k in range(1, shape.n + 1) for x in shape.cells}


def exit_table(shape: Partition, census: FCensus | None = None) -> dict[tuple[int, Cell], int]:
    c = _census(shape, census, "enumeration")
    return {(k, x): delta_formula(shape, k, x, c) for k in range(1, shape.n) for x in shape.cells}


def exchange_table(shape: Partition, census: FCensus | None = None) -> dict[int, int]:
    c = _census(shape, census, "enumeration")
    return {k: exchange_formula(shape, k, c) for k in range(1, shape.n)}


def _conjugate_keys(table: Mapping[tuple[int, Cell], int]) -> dict[tuple[int, Cell], int]:
    return {(k, x.conjugate()): v for (k, x), v in table.items()}


def symmetry_check(
    shape: Partition, source: Literal["formula", "oracle"] = "formula"
) -> list[FormulaReport]:
    """Compare ``C``, ``d``, ``ε`` and ``Δ`` on ``λ`` and ``λ'`` (cells conjugated)."""
    conj = shape.conjugate()
    if source == "formula":
        def tables(lam: Partition) -> tuple[Any, ...]:
            c = f_census(lam)
            return complexity_formula(lam, census=c), drop_table(lam, c), exchange_table(lam, c), exit_table(lam, c)
    elif source == "oracle":
        from . import oracle

        def tables(lam: Partition) -> tuple[Any, ...]:
            return (
                oracle.complexity_bruteforce(lam),
                oracle.drop_bruteforce(lam),
                oracle.exchange_numbers(lam),
                oracle.signed_exit_bruteforce(lam),
            )
    else:
        raise ValueError(f"unknown source {source!r}")
    c1, d1, e1, x1 = tables(shape)
    c2, d2, e2, x2 = tables(conj)
    return [
        FormulaReport(shape, f"symmetry-complexity-{source}", c1, c2),
        FormulaReport(shape, f"symmetry-drop-{source}", d1, _conjugate_keys(d2)),
        FormulaReport(shape, f"symmetry-exchange-{source}", e1, e2),
        FormulaReport(shape, f"symmetry-exit-{source}", x1, _conjugate_keys(x2)),
    ]


def formula_vs_oracle(
    shape: Partition, backend: Backend = "enumeration", comp2_variant: Comp2Variant = "corrected"
) -> list[FormulaReport]:
    """Every closed formula for ``shape`` next to its brute-force value."""
    from . import oracle

    c = f_census(shape, backend)
    n = shape.n
    drops = oracle.drop_bruteforce(shape)
    exits = oracle.signed_exit_bruteforce(shape)
    exchanges = oracle.exchange_numbers(shape)
    brute_c = oracle.complexity_bruteforce(shape)
    reports = [
        FormulaReport(shape, "exit", exit_table(shape, c), exits),
        FormulaReport(shape, "drop", drop_table(shape, c), drops),
        FormulaReport(
            shape,
            "drop2",
            {(k, x): drop_formula(shape, k, x, "hook-product", c) for k in range(1, n + 1) for x in shape.cells},
            drops,
        ),
        FormulaReport(shape, "exchange", exchange_table(shape, c), exchanges),
        FormulaReport(shape, "comp1", complexity_formula(shape, "comp1", c), brute_c),
        FormulaReport(shape, f"comp2-{comp2_variant}", complexity_formula(shape, f"comp2-{comp2_variant}", c), brute_c),
        FormulaReport(shape, "sumex", complexity_from_exchanges(shape, exchanges), brute_c),
        FormulaReport(shape, "sumd1", complexity_from_drops(shape, drops, "sumd1", c), brute_c),
        FormulaReport(shape, "sumd2", complexity_from_drops(shape, drops, "sumd2", c), brute_c),
        FormulaReport(
            shape,
            "exitrec",
            all(delta_recursion_check(shape, k, x, c) for k in range(1, n) for x in shape.cells),
            True,
        ),
        FormulaReport(
            shape,
            "droprec",
            all(drop_recursion_check(shape, k, x, c) for k in range(1, n + 1) for x in shape.cells),
            True,
        ),
        FormulaReport(shape, "recexchange", all(exchange_recursion_check(shape, k, c) for k in range(1, n)), True),
        FormulaReport(
            shape, "exchange-from-exit", {k: exchange_from_exit(shape, k, c) for k in range(1, n)}, exchanges
        ),
    ]
    return reports

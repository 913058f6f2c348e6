"""Explicit bijections built on the encoding ``Φ`` of the sorting algorithm.

* ``Ψ : T(λ, k→x) × {k..n} → H(λ) × SYT(λ, x ≥ k)``, ``(T, l) ↦ Φ((k l) ∘ T)``,
  together with its inverse and the conjugation involution it induces.
* ``ψ : A(λ, k) ∖ Ex(λ, k) → B(λ, k)``, ``(T, i) ↦ (Φ(T), i − e(T, k))``.
* The ping-pong bijection ``Ex(λ, k) × {k..n} → Ex(λ', k) × {k..n}``.

Elements of ``A(λ, k)`` are pairs ``(T, i)`` with ``1 <= i <= h'(x)`` where
``x`` is the drop cell of ``k`` in ``T``.  An exchange ``(T, l) ∈ Ex(λ, k)``
is embedded into ``A`` as ``(T, i)`` where ``i`` is its chronological index
among the exchanges of ``k`` with larger entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .formulas import drop_formula
from .engine import SortTrace, nps_decode, nps_encode, nps_sort
from .oracle import ExchangeWitness, drop_cell, exchanges_of
from .shapes import Cell, Partition, cohook
from .tableaux import (
    HookTableau,
    Tabloid,
    enumerate_hook_tableaux,
    enumerate_syt,
    enumerate_tabloids,
    f_census,
    format_grid,
)


class BijectionError(ValueError):
    """An input lies outside the domain of a bijection."""


@dataclass(frozen=True)
class DropWitness:
    """A tabloid in ``T(λ, k→x)`` together with a label ``k <= l <= n``."""

    tabloid: Tabloid
    label: int


@dataclass(frozen=True)
class AElement:
    """``(T, i) ∈ A(λ, k)``."""

    tabloid: Tabloid
    index: int


@dataclass(frozen=True)
class BElement:
    """``(H, U, j) ∈ B(λ, k)``."""

    hook: HookTableau
    tableau: Tabloid
    index: int


@lru_cache(maxsize=1 << 16)
def _trace(t: Tabloid) -> SortTrace:
    return nps_sort(t)


@lru_cache(maxsize=1 << 16)
def _encode(t: Tabloid) -> tuple[HookTableau, Tabloid]:
    return nps_encode(t)


@lru_cache(maxsize=1 << 16)
def _decode(h: HookTableau, u: Tabloid) -> Tabloid:
    return nps_decode(h, u)


def drops_at(t: Tabloid, k: int, x: Sequence[int]) -> bool:
    return drop_cell(_trace(t), k) == Cell(*x)


def e_value(t: Tabloid, k: int) -> int:
    """``e(T, k) = h'(drop cell) - h'(final cell)``."""
    trace = _trace(t)
    return cohook(drop_cell(trace, k)) - cohook(trace.output.position(k))


def _check_k(shape: Partition, k: int) -> None:
    if not 1 <= k <= shape.n:
        raise BijectionError(f"k={k} outside 1..{shape.n}")


def psi_forward(shape: Partition, k: int, x: Sequence[int], w: DropWitness) -> tuple[HookTableau, Tabloid]:
    """``Ψ(T, l) = Φ((k l) ∘ T)``."""
    _check_k(shape, k)
    x = shape.check_cell(x)
    t = w.tabloid
    if t.shape != shape:
        raise BijectionError(f"tabloid has shape {t.shape}, expected {shape}")
    if not k <= w.label <= shape.n:
        raise BijectionError(f"label {w.label} outside {k}..{shape.n}")
    if not drops_at(t, k, x):
        raise BijectionError(f"{t} does not drop {k} at {x}")
    return _encode(t.swap_values(k, w.label))


def _bounded_below(t: Tabloid, x: Cell, k: int) -> bool:
    """Whether ``t(z) >= k`` for every cell ``z`` weakly south-east of ``x``."""
    return all(t[z] >= k for z in t.shape.cells if z.row >= x.row and z.col >= x.col)


def psi_inverse(shape: Partition, k: int, x: Sequence[int], h: HookTableau, u: Tabloid) -> DropWitness:
    """Inverse of :func:`psi_forward`, following the case split of its construction."""
    _check_k(shape, k)
    x = shape.check_cell(x)
    if u.shape != shape or h.shape != shape:
        raise BijectionError(f"inputs do not have shape {shape}")
    if u[x] < k:
        raise BijectionError(f"U({x}) = {u[x]} < {k}")
    t = _decode(h, u)
    trace = _trace(t)
    if drop_cell(trace, k) == x:
        return DropWitness(t, k)
    if _bounded_below(trace.intermediates[x], x, k):
        l = t[x]
    else:
        y = next((c for c in reversed(trace.order.cells) if _bounded_below(trace.intermediates[c], x, k)), None)
        if y is None:
            raise BijectionError(f"no cell y with T_y >= {k} below {x}")
        l = t[y]
    return DropWitness(t.swap_values(k, l), l)


def drop_involution(shape: Partition, k: int, x: Sequence[int], w: DropWitness) -> DropWitness:
    """``Ψ_λ'^{-1}`` of the conjugate of ``Ψ_λ(w)``: a witness for ``k`` dropping at ``x'`` in ``λ'``."""
    x = shape.check_cell(x)
    h, u = psi_forward(shape, k, x, w)
    return psi_inverse(shape.conjugate(), k, x.conjugate(), h.conjugate(), u.conjugate())


def psi_exchange(shape: Partition, k: int, a: AElement) -> BElement:
    """``ψ(T, i) = (Φ(T), i − e(T, k))`` on ``A(λ, k) ∖ Ex(λ, k)``."""
    _check_k(shape, k)
    t = a.tabloid
    if t.shape != shape:
        raise BijectionError(f"tabloid has shape {t.shape}, expected {shape}")
    x = drop_cell(_trace(t), k)
    if not 1 <= a.index <= cohook(x):
        raise BijectionError(f"index {a.index} outside 1..{cohook(x)}: not in A")
    e = e_value(t, k)
    if a.index <= e:
        raise BijectionError(f"({t}, {a.index}) lies in Ex since e(T,{k}) = {e}")
    h, u = _encode(t)
    return BElement(h, u, a.index - e)


def psi_exchange_inverse(shape: Partition, k: int, b: BElement) -> AElement:
    _check_k(shape, k)
    if b.tableau.shape != shape or b.hook.shape != shape:
        raise BijectionError(f"inputs do not have shape {shape}")
    y = b.tableau.position(k)
    if not 1 <= b.index <= cohook(y):
        raise BijectionError(f"index {b.index} outside 1..{cohook(y)}: not in B")
    t = _decode(b.hook, b.tableau)
    return AElement(t, b.index + e_value(t, k))


def conjugate_b(b: BElement) -> BElement:
    """``g(H, U, j) = (H', U', j)``."""
    return BElement(b.hook.conjugate(), b.tableau.conjugate(), b.index)


def embed_exchange(w: ExchangeWitness) -> AElement:
    return AElement(w.tabloid, w.index)


def exchange_at(t: Tabloid, k: int, index: int) -> ExchangeWitness:
    """The ``index``-th exchange of ``k`` with a larger entry in the sort of ``t``."""
    found = exchanges_of(_trace(t), k)
    if not 1 <= index <= len(found):
        raise BijectionError(f"{t} has {len(found)} exchanges of {k}, no index {index}")
    return found[index - 1]


def _a_to_a_conjugate(shape: Partition, k: int, a: AElement, label: int) -> tuple[AElement, int]:
    """The bijection ``A(λ, k) × {k..n} → A(λ', k) × {k..n}`` via ``Ψ``, conjugation and ``Ψ^{-1}``."""
    x = drop_cell(_trace(a.tabloid), k)
    w = drop_involution(shape, k, x, DropWitness(a.tabloid, label))
    return AElement(w.tabloid, a.index), w.label


@dataclass
class PingPongResult:
    witness: ExchangeWitness
    label: int
    trajectory: list[dict] = field(default_factory=list)

    @property
    def steps(self) -> int:
        return len(self.trajectory)


def pingpong(
    shape: Partition, k: int, e: ExchangeWitness, label: int, max_steps: int | None = None
) -> PingPongResult:
    """``Ex(λ, k) × {k..n} → Ex(λ', k) × {k..n}`` by alternating ``f`` and ``g``.

    The trajectory records every intermediate element of ``B(λ', k)`` and
    ``B(λ, k)`` that is visited.  ``max_steps`` defaults to ``|A| + |B|``.
    """
    _check_k(shape, k)
    n = shape.n
    if not k <= label <= n:
        raise BijectionError(f"label {label} outside {k}..{n}")
    if e.tabloid.shape != shape:
        raise BijectionError(f"witness has shape {e.tabloid.shape}, expected {shape}")
    if exchange_at(e.tabloid, k, e.index) != e:
        raise BijectionError(f"{e} is not an exchange of {k}")
    conj = shape.conjugate()
    if max_steps is None:
        max_steps = a_size(shape, k) + b_size(shape, k) + 1
    a, l = embed_exchange(e), label
    trajectory: list[dict] = []
    for _ in range(max_steps):
        a2, l = _a_to_a_conjugate(shape, k, a, l)
        if a2.index <= e_value(a2.tabloid, k):
            return PingPongResult(exchange_at(a2.tabloid, k, a2.index), l, trajectory)
        b_conj = psi_exchange(conj, k, a2)
        b = conjugate_b(b_conj)
        trajectory.append({"b_conjugate": _b_json(b_conj), "b": _b_json(b), "label": l})
        a = psi_exchange_inverse(shape, k, b)
    raise BijectionError(f"ping-pong did not terminate within {max_steps} steps")


def pingpong_inverse(shape: Partition, k: int, e: ExchangeWitness, label: int) -> PingPongResult:
    """Inverse of :func:`pingpong` on ``λ``: the same procedure started on ``λ'``."""
    return pingpong(shape.conjugate(), k, e, label)


def _b_json(b: BElement) -> dict:
    return {"hook": format_grid(b.hook.rows), "tableau": format_grid(b.tableau.rows), "index": b.index}


# enumerations of the sets involved


def drop_set(shape: Partition, k: int, x: Sequence[int]) -> list[Tabloid]:
    """``T(λ, k→x)``."""
    x = shape.check_cell(x)
    return [t for t in enumerate_tabloids(shape) if drop_cell(_trace(t), k) == x]


def syt_at_least(shape: Partition, x: Sequence[int], k: int) -> list[Tabloid]:
    """``SYT(λ, x ≥ k)``."""
    x = shape.check_cell(x)
    return [u for u in enumerate_syt(shape) if u[x] >= k]


def a_set(shape: Partition, k: int) -> Iterator[AElement]:
    for t in enumerate_tabloids(shape):
        for i in range(1, cohook(drop_cell(_trace(t), k)) + 1):
            yield AElement(t, i)


def b_set(shape: Partition, k: int) -> Iterator[BElement]:
    for u in enumerate_syt(shape):
        for h in enumerate_hook_tableaux(shape):
            for j in range(1, cohook(u.position(k)) + 1):
                yield BElement(h, u, j)


def ex_set(shape: Partition, k: int) -> Iterator[ExchangeWitness]:
    for t in enumerate_tabloids(shape):
        yield from exchanges_of(_trace(t), k)


def a_size(shape: Partition, k: int) -> int:
    """``|A(λ, k)| = Σ_x d(k, x) h'(x)``, from the closed drop formula."""
    c = f_census(shape)
    return sum(drop_formula(shape, k, x, census=c) * cohook(x) for x in shape.cells)


def b_size(shape: Partition, k: int) -> int:
    """``|B(λ, k)| = ∏h · Σ_y f(k, y) h'(y)``."""
    c = f_census(shape)
    return shape.hook_product * sum(c[k, y] * cohook(y) for y in shape.cells)


def find_label_collision(
    shape: Partition, k: int, x: Sequence[int]
) -> tuple[DropWitness, DropWitness, DropWitness] | None:
    """Witnesses with distinct tabloids whose involution images share a tabloid.

    The images then necessarily differ in their labels.  Returns
    ``(w1, w2, image_of_w2)`` for the first such pair, or ``None``.
    """
    x = shape.check_cell(x)
    seen: dict[Tabloid, DropWitness] = {}
    for t in drop_set(shape, k, x):
        for l in range(k, shape.n + 1):
            w = DropWitness(t, l)
            image = drop_involution(shape, k, x, w)
            prior = seen.get(image.tabloid)
            if prior is not None and prior.tabloid != t:
                return prior, w, image
            seen.setdefault(image.tabloid, w)
    return None


__all__ = [
    "AElement",
    "BElement",
    "BijectionError",
    "DropWitness",
    "PingPongResult",
    "a_set",
    "a_size",
    "b_set",
    "b_size",
    "conjugate_b",
    "drop_involution",
    "drop_set",
    "drops_at",
    "e_value",
    "embed_exchange",
    "ex_set",
    "exchange_at",
    "find_label_collision",
    "pingpong",
    "pingpong_inverse",
    "psi_exchange",
    "psi_exchange_inverse",
    "psi_forward",
    "psi_inverse",
    "syt_at_least",
]

"""Exhaustive verification suites and counterexample searches.

Each suite checks one family of identities on a single partition and
returns a :class:`SuiteResult`.  :func:`run_suites` fans the work out over
partitions (optionally in worker processes) and merges the results in a
fixed order, so the output does not depend on scheduling.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import bijections as bij
from . import formulas, oracle
from .arith import factorial
from .engine import check_invariance, nps_decode, nps_encode, nps_sort, output_multiset
from .shapes import Cell, Partition, cell_order_from_tableau, partitions_of, partitions_up_to, subpartitions
from .tableaux import (
    enumerate_hook_tableaux,
    enumerate_syt,
    enumerate_tabloids,
    f_census,
    hook_length_formula,
    skew_syt_bruteforce,
    skew_syt_count,
)


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    shape: Partition
    passed: bool
    detail: str = ""


def _result(suite: str, shape: Partition, failures: list[str], checked: int) -> SuiteResult:
    if failures:
        return SuiteResult(suite, shape, False, f"{len(failures)} failures; first: {failures[0]}")
    return SuiteResult(suite, shape, True, f"{checked} checks")


def suite_hlf(shape: Partition) -> SuiteResult:
    count = sum(1 for _ in enumerate_syt(shape))
    expected = hook_length_formula(shape)
    ok = count == expected and expected * shape.hook_product == factorial(shape.n)
    return SuiteResult("hlf", shape, ok, f"#SYT={count}, formula={expected}")


def suite_phi_tabloids(shape: Partition) -> SuiteResult:
    """``decode(encode(T)) == T`` and injectivity of ``encode`` on every tabloid."""
    failures, codes = [], set()
    checked = 0
    for t in enumerate_tabloids(shape):
        h, u = nps_encode(t)
        codes.add((h, u))
        checked += 1
        if nps_decode(h, u) != t:
            failures.append(str(t))
    if len(codes) != checked:
        failures.append("encode not injective")
    return _result("phi-tabloids", shape, failures, checked)


def suite_phi_codes(shape: Partition) -> SuiteResult:
    """``encode(decode(H, U)) == (H, U)`` on every pair."""
    failures = []
    checked = 0
    syt = list(enumerate_syt(shape))
    for h in enumerate_hook_tableaux(shape):
        for u in syt:
            checked += 1
            if nps_encode(nps_decode(h, u)) != (h, u):
                failures.append(f"H={h} U={u}")
    if checked != factorial(shape.n):
        failures.append(f"#H·#SYT = {checked} != n!")
    return _result("phi-codes", shape, failures, checked)


def suite_uniform_output(shape: Partition) -> SuiteResult:
    hist = output_multiset(shape)
    syt = list(enumerate_syt(shape))
    bad = [f"{u}: {hist.get(u, 0)}" for u in syt if hist.get(u, 0) != shape.hook_product]
    if sum(hist.values()) != factorial(shape.n):
        bad.append("histogram does not cover all tabloids")
    return _result("uniform-output", shape, bad, len(syt))


def suite_invariance(shape: Partition, random_perms: int = 100, seed: int = 0) -> SuiteResult:
    """Invariance under all value transpositions fixing ``1..k-1`` plus seeded random permutations."""
    n = shape.n
    tabloids = list(enumerate_tabloids(shape))
    traces = {t: nps_sort(t) for t in tabloids}
    failures = []
    checked = 0
    for k in range(1, n + 1):
        free = list(range(k, n + 1))
        for a, b in itertools.combinations(free, 2):
            perm = {a: b, b: a}
            for t in tabloids:
                checked += 1
                if not check_invariance(t, perm, k, traces=traces):
                    failures.append(f"T={t} k={k} ({a} {b})")
        rng = random.Random(f"{seed}:{shape}:{k}")
        for _ in range(random_perms):
            image = free[:]
            rng.shuffle(image)
            perm = dict(zip(free, image))
            t = rng.choice(tabloids)
            checked += 1
            if not check_invariance(t, perm, k, traces=traces):
                failures.append(f"T={t} k={k} perm={perm}")
    return _result("invariance", shape, failures, checked)


def _formula_suite(name: str, ids: Sequence[str]) -> Callable[[Partition], SuiteResult]:
    def run(shape: Partition) -> SuiteResult:
        reports = [r for r in formulas.formula_vs_oracle(shape) if r.formula in ids]
        bad = [r.formula for r in reports if not r.equal]
        return _result(name, shape, bad, len(reports))

    run.__name__ = f"suite_{name}"
    return run


suite_exit = _formula_suite("exit", ["exit", "exitrec"])
suite_drop = _formula_suite("drop", ["drop", "drop2", "droprec"])
suite_exchange = _formula_suite("exchange", ["exchange", "recexchange", "exchange-from-exit"])
suite_complexity = _formula_suite("complexity", ["comp1", "comp2-corrected"])
suite_sums = _formula_suite("sums", ["sumex", "sumd1", "sumd2"])


def suite_statistics(shape: Partition) -> SuiteResult:
    """Definitional sanity: row sums of the drop table, ``d(1, x) = (n-1)!``, independence of ``ε(k, l)`` from ``l``."""
    n = shape.n
    drop = oracle.drop_bruteforce(shape)
    pair = oracle.exchange_bruteforce(shape)
    bad = []
    for k in range(1, n + 1):
        if sum(drop[k, x] for x in shape.cells) != factorial(n):
            bad.append(f"Σ_x d({k},x) != n!")
    bad += [f"d(1,{x})" for x in shape.cells if drop[1, x] != factorial(n - 1)]
    for k in range(1, n):
        values = {pair[k, l] for l in range(k + 1, n + 1)}
        if len(values) != 1:
            bad.append(f"ε({k},l) depends on l: {sorted(values)}")
        if len(list(oracle.exchange_set(shape, k))) != (n - k) * pair[k, n]:
            bad.append(f"#Ex(λ,{k}) != (n-k)ε({k})")
    return _result("statistics", shape, bad, n)


def suite_symmetry_formula(shape: Partition) -> SuiteResult:
    reports = formulas.symmetry_check(shape, "formula")
    return _result("symmetry-formula", shape, [r.formula for r in reports if not r.equal], len(reports))


def suite_symmetry_oracle(shape: Partition) -> SuiteResult:
    reports = formulas.symmetry_check(shape, "oracle")
    return _result("symmetry-oracle", shape, [r.formula for r in reports if not r.equal], len(reports))


def suite_census(shape: Partition) -> SuiteResult:
    """Both census backends agree, and Aitken's count matches enumeration on every ``λ/μ``."""
    bad = []
    a, b = f_census(shape, "enumeration"), f_census(shape, "determinant")
    if a.table != b.table or a.total != b.total:
        bad.append("census backends differ")
    subs = subpartitions(shape)
    for mu in subs:
        if skew_syt_count(shape, mu) != skew_syt_bruteforce(shape, mu):
            bad.append(f"skew {shape}/{mu}")
    return _result("census", shape, bad, len(subs) + 1)


def suite_psi(shape: Partition) -> SuiteResult:
    """``Ψ`` and ``Ψ^{-1}`` are mutually inverse on ``T(λ, k→x) × {k..n}``, plus the drop involution."""
    n = shape.n
    bad = []
    checked = 0
    for k in range(1, n + 1):
        for x in shape.cells:
            targets = set(bij.syt_at_least(shape, x, k))
            image = set()
            for t in bij.drop_set(shape, k, x):
                for l in range(k, n + 1):
                    w = bij.DropWitness(t, l)
                    h, u = bij.psi_forward(shape, k, x, w)
                    checked += 1
                    if u not in targets:
                        bad.append(f"Ψ({t},{l}) leaves SYT(λ,x≥k)")
                    if bij.psi_inverse(shape, k, x, h, u) != w:
                        bad.append(f"Ψ^-1Ψ({t},{l}) k={k} x={x}")
                    v = bij.drop_involution(shape, k, x, w)
                    if bij.drop_involution(shape.conjugate(), k, x.conjugate(), v) != w:
                        bad.append(f"involution at ({t},{l})")
                    image.add((h, u))
            if len(image) != shape.hook_product * len(targets):
                bad.append(f"Ψ not onto for k={k} x={x}")
    return _result("psi", shape, bad, checked)


def suite_psi_cardinality(shape: Partition) -> SuiteResult:
    """``|T(λ, k→x)| (n-k+1) = ∏h · |SYT(λ, x ≥ k)|`` by counting."""
    n = shape.n
    drop = oracle.drop_bruteforce(shape)
    syt = list(enumerate_syt(shape))
    bad = []
    for k in range(1, n + 1):
        for x in shape.cells:
            rhs = shape.hook_product * sum(1 for u in syt if u[x] >= k)
            if drop[k, x] * (n - k + 1) != rhs:
                bad.append(f"k={k} x={x}")
    return _result("psi-cardinality", shape, bad, n * n)


def suite_psi_exchange(shape: Partition) -> SuiteResult:
    bad = []
    checked = 0
    for k in range(1, shape.n + 1):
        outside = [a for a in bij.a_set(shape, k) if a.index > bij.e_value(a.tabloid, k)]
        image = set()
        for a in outside:
            b = bij.psi_exchange(shape, k, a)
            image.add(b)
            checked += 1
            if bij.psi_exchange_inverse(shape, k, b) != a:
                bad.append(f"ψ^-1ψ({a.tabloid},{a.index}) k={k}")
        if image != set(bij.b_set(shape, k)):
            bad.append(f"ψ image != B for k={k}")
        if len(outside) + len(list(bij.ex_set(shape, k))) != bij.a_size(shape, k):
            bad.append(f"|A∖Ex| + |Ex| != |A| for k={k}")
    return _result("psi-exchange", shape, bad, checked)


def suite_pingpong(shape: Partition) -> SuiteResult:
    n = shape.n
    conj = shape.conjugate()
    bad = []
    checked = 0
    for k in range(1, n + 1):
        bound = bij.a_size(shape, k) + bij.b_size(shape, k)
        domain = [(e, l) for e in bij.ex_set(shape, k) for l in range(k, n + 1)]
        codomain = {(e, l) for e in bij.ex_set(conj, k) for l in range(k, n + 1)}
        image = set()
        for e, l in domain:
            r = bij.pingpong(shape, k, e, l)
            checked += 1
            if r.steps > bound:
                bad.append(f"{r.steps} steps > {bound}")
            back = bij.pingpong_inverse(shape, k, r.witness, r.label)
            if (back.witness, back.label) != (e, l):
                bad.append(f"inverse fails at ({e.tabloid},{e.partner},{l})")
            image.add((r.witness, r.label))
        if image != codomain:
            bad.append(f"image != Ex(λ',{k}) × labels")
    return _result("pingpong", shape, bad, checked)


SUITES: dict[str, Callable[[Partition], SuiteResult]] = {
    "hlf": suite_hlf,
    "phi-tabloids": suite_phi_tabloids,
    "phi-codes": suite_phi_codes,
    "uniform-output": suite_uniform_output,
    "invariance": suite_invariance,
    "statistics": suite_statistics,
    "exit": suite_exit,
    "drop": suite_drop,
    "exchange": suite_exchange,
    "complexity": suite_complexity,
    "sums": suite_sums,
    "symmetry-formula": suite_symmetry_formula,
    "symmetry-oracle": suite_symmetry_oracle,
    "census": suite_census,
    "psi": suite_psi,
    "psi-cardinality": suite_psi_cardinality,
    "psi-exchange": suite_psi_exchange,
    "pingpong": suite_pingpong,
}

FORMULA_SUITES = ("exit", "drop", "exchange", "complexity", "sums", "symmetry-formula", "symmetry-oracle", "census")


def _run_one(task: tuple[str, tuple[int, ...]]) -> SuiteResult:
    name, parts = task
    shape = Partition(parts)
    try:
        return SUITES[name](shape)
    except Exception as exc:  # a crash is a failed check, reported with its cause
        return SuiteResult(name, shape, False, f"{type(exc).__name__}: {exc}")


def run_suites(
    shapes: Iterable[Partition], suites: Sequence[str] | None = None, jobs: int = 1
) -> list[SuiteResult]:
    """Run ``suites`` on every shape; results are ordered by shape, then suite."""
    names = list(suites) if suites is not None else list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suites: {', '.join(unknown)}")
    tasks = [(s, lam.parts) for lam in shapes for s in names]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, tasks))
    return [_run_one(t) for t in tasks]


def verify(max_n: int, suites: Sequence[str] | None = None, jobs: int = 1, min_n: int = 1) -> list[SuiteResult]:
    return run_suites(partitions_up_to(max_n, min_n), suites, jobs)


# counterexample searches


@dataclass(frozen=True)
class LocalConjugationWitness:
    shape: Partition
    k: int
    x: Cell
    y: Cell
    count: int
    conjugate_count: int


def find_local_conjugation(max_n: int) -> LocalConjugationWitness | None:
    """Smallest ``(λ, k, x, y)`` with ``ε_λ(k, x, y) != ε_λ'(k, x', y')``.

    Search order: increasing ``n``, partitions in lexicographically decreasing
    order, then ``(k, x, y)`` lexicographically.
    """
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            mismatches = oracle.local_conjugation_mismatches(lam)
            if mismatches:
                k, x, y, v, w = mismatches[0]
                return LocalConjugationWitness(lam, k, x, y, v, w)
    return None


@dataclass(frozen=True)
class NonuniformOrderWitness:
    shape: Partition
    order_tableau: object
    histogram: dict
    expected: int


def find_nonuniform_order(max_n: int) -> NonuniformOrderWitness | None:
    """Smallest ``λ`` and SYT ``U`` such that sorting along ``≺_U`` is not uniform on SYT(λ).

    Search order: increasing ``n``, partitions in lexicographically decreasing
    order, then ``U`` in enumeration order.
    """
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            syt = list(enumerate_syt(lam))
            for u in syt:
                hist = output_multiset(lam, cell_order_from_tableau(u))
                full = {v: hist.get(v, 0) for v in syt}
                if any(c != lam.hook_product for c in full.values()):
                    return NonuniformOrderWitness(lam, u, full, lam.hook_product)
    return None

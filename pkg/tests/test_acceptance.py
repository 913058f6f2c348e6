"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All checks are exact and exhaustive over the stated ranges of ``n``.  Run with
``pytest tests/test_acceptance.py -v`` to see the criterion lines.
"""

from fractions import Fraction

import pytest

from nps_tableaux import oracle
from nps_tableaux.formulas import complexity_formula, formula_vs_oracle, symmetry_check
from nps_tableaux.shapes import Cell, Partition, partitions_up_to
from nps_tableaux.tableaux import f_census, hook_length_formula
from nps_tableaux.verify import find_local_conjugation, find_nonuniform_order, run_suites


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")

    return emit


def suite_failures(max_n: int, names: list[str]) -> tuple[list[str], int]:
    results = run_suites(partitions_up_to(max_n, 1), names)
    bad = [f"{r.suite}[{r.shape}]: {r.detail}" for r in results if not r.passed]
    return bad, len(results)


def check(report, number: int, failures: list[str], detail: str) -> None:
    report(number, not failures, detail if not failures else failures[0])
    assert failures == []


def test_criterion_01_hook_length_formula(report):
    bad, runs = suite_failures(8, ["hlf"])
    if hook_length_formula(Partition((4, 4, 3))) != 462:
        bad.append("f(4,4,3) != 462")
    check(report, 1, bad, f"{runs} shapes up to n=8, f(4,4,3)=462")


def test_criterion_02_phi_bijectivity(report):
    bad, runs = suite_failures(7, ["phi-tabloids"])
    more, runs2 = suite_failures(6, ["phi-codes"])
    check(report, 2, bad + more, f"decode∘encode on {runs} shapes n<=7, encode∘decode on {runs2} shapes n<=6")


def test_criterion_03_uniform_output(report):
    bad, runs = suite_failures(7, ["uniform-output"])
    check(report, 3, bad, f"{runs} shapes up to n=7")


def test_criterion_04_invariance(report):
    bad, runs = suite_failures(5, ["invariance"])
    check(report, 4, bad, f"{runs} shapes up to n=5, all transpositions plus 100 seeded permutations per k")


def test_criterion_05_signed_exit(report):
    bad, runs = suite_failures(6, ["exit"])
    delta = oracle.signed_exit_bruteforce(Partition((2,)))
    if (delta[1, Cell(1, 2)], delta[1, Cell(1, 1)]) != (1, -1):
        bad.append(f"spot values {delta}")
    check(report, 5, bad, f"{runs} shapes up to n=6, Δ_(2)(1,(1,2))=1, Δ_(2)(1,(1,1))=-1")


def test_criterion_06_drop_function(report):
    bad, runs = suite_failures(6, ["drop", "statistics"])
    check(report, 6, bad, f"drop, drop2, droprec, d(1,x)=(n-1)!, row sums n! on {runs // 2} shapes up to n=6")


def test_criterion_07_exchange_numbers(report):
    bad, runs = suite_failures(6, ["exchange", "statistics"])
    ex = oracle.exchange_numbers(Partition((2, 1)))
    if (ex[1], ex[2]) != (2, 0):
        bad.append(f"spot values {ex}")
    check(report, 7, bad, f"{runs // 2} shapes up to n=6, ε_(2,1) = (2, 0)")


def test_criterion_08_complexity(report):
    bad, runs = suite_failures(7, ["complexity"])
    spots = {(2,): Fraction(1, 2), (2, 1): Fraction(2, 3), (3,): Fraction(3, 2)}
    for parts, value in spots.items():
        if oracle.complexity_bruteforce(Partition(parts)) != value:
            bad.append(f"C{parts} != {value}")
    two = Partition((2,))
    paper = complexity_formula(two, "comp2-paper")
    if paper == oracle.complexity_bruteforce(two):
        bad.append("comp2-paper unexpectedly agrees on (2)")
    reports = formula_vs_oracle(two, comp2_variant="paper")
    flagged = [r for r in reports if r.formula == "comp2-paper" and not r.equal]
    if not flagged:
        bad.append("comp2-paper discrepancy not reported")
    check(report, 8, bad, f"{runs} shapes up to n=7; comp2-paper gives {paper} vs 1/2 on (2), reported")


def test_criterion_09_sum_identities(report):
    bad, runs = suite_failures(6, ["sums"])
    check(report, 9, bad, f"sumex, sumd1, sumd2 on {runs} shapes up to n=6")


def test_criterion_10_symmetry(report):
    bad, runs = suite_failures(7, ["symmetry-formula"])
    more, runs2 = suite_failures(6, ["symmetry-oracle"])
    c3 = oracle.complexity_bruteforce(Partition((3,)))
    c111 = oracle.complexity_bruteforce(Partition((1, 1, 1)))
    if not c3 == c111 == Fraction(3, 2):
        bad.append(f"C(3)={c3}, C(1,1,1)={c111}")
    if not all(r.equal for r in symmetry_check(Partition((3,)), "oracle")):
        bad.append("symmetry fails on (3)")
    check(report, 10, bad + more, f"formulas on {runs} shapes n<=7, oracles on {runs2} shapes n<=6, C(3)=C(1,1,1)=3/2")


def test_criterion_11_psi(report):
    bad, runs = suite_failures(5, ["psi"])
    more, runs2 = suite_failures(6, ["psi-cardinality"])
    check(report, 11, bad + more, f"round trips on {runs} shapes n<=5, cardinalities on {runs2} shapes n<=6")


def test_criterion_12_psi_exchange(report):
    bad, runs = suite_failures(5, ["psi-exchange"])
    check(report, 12, bad, f"A∖Ex → B on {runs} shapes up to n=5")


def test_criterion_13_pingpong(report):
    bad, runs = suite_failures(5, ["pingpong"])
    check(report, 13, bad, f"{runs} shapes up to n=5, inverse by the conjugate run, steps within |A|+|B|")


class NonuniformBoundMissed(AssertionError):
    """No non-uniform ``≺_U`` histogram exists within the stated bound."""


@pytest.mark.xfail(
    raises=NonuniformBoundMissed,
    strict=True,
    reason="the smallest non-uniform order occurs at n=6, beyond the allowed bound n<=5",
)
def test_criterion_14_counterexamples(report):
    local = find_local_conjugation(6)
    assert local is not None, "no local-conjugation witness within n<=6"
    nonuniform = find_nonuniform_order(5)
    local_text = f"local-conjugation at {local.shape}, k={local.k}: {local.count} vs {local.conjugate_count}"
    if nonuniform is None:
        report(14, False, f"{local_text}; no non-uniform order within n<=5, first witness at n=6")
        raise NonuniformBoundMissed("no non-uniform order within n<=5")
    report(14, True, f"{local_text}; non-uniform order at {nonuniform.shape}")


def test_criterion_14_nonuniform_witness_beyond_bound():
    assert find_nonuniform_order(5) is None
    w = find_nonuniform_order(6)
    assert w is not None and w.shape.n == 6
    assert any(v != w.expected for v in w.histogram.values())


def test_criterion_15_census_backends(report):
    bad = []
    shapes = partitions_up_to(7, 1)
    for lam in shapes:
        a, b = f_census(lam, "enumeration"), f_census(lam, "determinant")
        if a.table != b.table:
            bad.append(f"census differs on {lam}")
    more, runs = suite_failures(6, ["census"])
    check(report, 15, bad + more, f"backends agree on {len(shapes)} shapes n<=7, skew counts on {runs} outer shapes n<=6")

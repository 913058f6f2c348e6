import json
from fractions import Fraction

import pytest

from nps_tableaux import formulas
from nps_tableaux.arith import factorial
from nps_tableaux.shapes import Partition, partitions_up_to


def P(*parts):
    return Partition(parts)


def test_delta_examples():
    assert formulas.delta_formula(P(2), 1, (1, 2)) == 1
    assert formulas.delta_formula(P(2), 1, (1, 1)) == -1
    assert formulas.delta_formula(P(2, 1), 1, (1, 1)) == -2
    with pytest.raises(ValueError):
        formulas.delta_formula(P(2, 1), 3, (1, 1))


def test_recursions_on_small_shapes():
    for lam in [P(2), P(2, 1), P(3, 2)]:
        for k in range(1, lam.n):
            for x in lam.cells:
                assert formulas.delta_recursion_check(lam, k, x)
                assert formulas.drop_recursion_check(lam, k, x)
            assert formulas.exchange_recursion_check(lam, k)


def test_drop_examples():
    for lam in partitions_up_to(6, 1):
        for x in lam.cells:
            for variant in ("harmonic-free", "hook-product"):
                assert formulas.drop_formula(lam, 1, x, variant) == factorial(lam.n - 1)
    assert formulas.drop_formula(P(2, 1), 2, (1, 2)) == 3
    assert formulas.drop_formula(P(2, 1), 3, (1, 1)) == 0
    with pytest.raises(ValueError):
        formulas.drop_formula(P(2, 1), 1, (1, 1), "other")


def test_exchange_examples():
    assert formulas.exchange_formula(P(2, 1), 1) == 2
    assert formulas.exchange_formula(P(2, 1), 2) == 0
    assert formulas.exchange_formula(P(2), 1) == 1


def test_complexity_variants():
    lam = P(2)
    assert formulas.complexity_formula(lam, "comp1") == Fraction(1, 2)
    assert formulas.complexity_formula(lam, "comp2-corrected") == Fraction(1, 2)
    assert formulas.complexity_formula(lam, "comp2-paper") == 0
    assert formulas.complexity_formula(P(2, 1)) == Fraction(2, 3)
    for variant in ("comp1", "comp2-corrected", "comp2-paper"):
        assert formulas.complexity_formula(P(1), variant) == 0


@pytest.mark.parametrize("lam", partitions_up_to(6, 1), ids=str)
@pytest.mark.parametrize("backend", ["enumeration", "determinant"])
def test_formulas_match_oracle(lam, backend):
    reports = formulas.formula_vs_oracle(lam, backend)
    assert [r.formula for r in reports if not r.equal] == []


def test_comp2_paper_disagreement_is_reported():
    reports = {r.formula: r for r in formulas.formula_vs_oracle(P(2), comp2_variant="paper")}
    r = reports["comp2-paper"]
    assert not r.equal and r.lhs == 0 and r.rhs == Fraction(1, 2)
    doc = r.to_json()
    assert doc == {"shape": "2", "formula": "comp2-paper", "lhs": "0", "rhs": "1/2", "equal": False}
    json.dumps(doc)


def test_symmetry_examples():
    three = formulas.symmetry_check(P(3))
    assert all(r.equal for r in three)
    assert three[0].lhs == three[0].rhs == Fraction(3, 2)
    for source in ("formula", "oracle"):
        assert all(r.equal for r in formulas.symmetry_check(P(3, 1), source))
        assert all(r.equal for r in formulas.symmetry_check(P(2, 1), source))


def test_cohook_sum_binomial():
    for lam in partitions_up_to(8):
        assert formulas.cohook_sum_binomial(lam) == sum(c.row + c.col - 2 for c in lam.cells)

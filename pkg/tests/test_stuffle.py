from fractions import Fraction
from itertools import product

import pytest

from config.settings import BASIS_BRACKETS, BASIS_OKOUNKOV
from qmzv.errors import ClosureError, UnsupportedIndexError
from qmzv.expansion import zq_expand, lincomb_expand, indices_up_to_weight
from qmzv.families import family_from_mapping
from qmzv.indices import LinComb
from qmzv.stuffle import (
    reduction_coeffs, reduction_residual, reduction_table, lambda_closed_form,
    eulerian_reduction_via_formula, corollary_sum, okounkov_printed_reduction,
    stuffle_product, stuffle_lincomb, eulerian_reduction_table,
)


def test_reduction_examples(eulerian, okounkov):
    assert reduction_coeffs(eulerian, 1, 1) == [(1, -1), (2, 1)]
    assert reduction_coeffs(okounkov, 2, 3) == [(5, 1)]
    assert reduction_coeffs(okounkov, 3, 3) == [(4, 1), (6, 4)]
    assert reduction_coeffs(eulerian, 2, 2) == [(2, Fraction(-1, 6)), (4, 1)]


def test_reduction_is_symmetric(eulerian, okounkov):
    for family in (eulerian, okounkov):
        for r in range(2, 7):
            for s in range(2, 7):
                assert reduction_coeffs(family, r, s) == reduction_coeffs(family, s, r)


def test_reduction_rechecks_exactly(eulerian, okounkov):
    for family in (eulerian, okounkov):
        for r in range(2, 8):
            for s in range(r, 8):
                assert reduction_residual(family, r, s, reduction_coeffs(family, r, s)).is_zero()


def test_lambda_closed_form_values():
    assert lambda_closed_form(1, 1, 1) == Fraction(-1, 2)
    assert lambda_closed_form(2, 2, 2) == Fraction(-1, 12)
    assert lambda_closed_form(3, 2, 2) == 0
    with pytest.raises(ValueError):
        lambda_closed_form(2, 2, 3)


def test_formula_examples():
    assert eulerian_reduction_via_formula(1, 1) == [(1, -1), (2, 1)]
    assert eulerian_reduction_via_formula(2, 2) == [(2, Fraction(-1, 6)), (4, 1)]


def test_solver_agrees_with_closed_form(eulerian):
    for r in range(1, 20):
        for s in range(1, 21 - r):
            assert reduction_coeffs(eulerian, r, s) == eulerian_reduction_via_formula(r, s), (r, s)


def test_no_entry_one_for_entries_above_one(eulerian):
    """Products of brackets with entries > 1 never reduce onto [1]."""
    table = eulerian_reduction_table(12)
    for (r, s), coeffs in table.items():
        if r > 1 and s > 1:
            assert all(j != 1 for j, _ in coeffs), (r, s)


def test_corollary_sum():
    assert corollary_sum(2, 3) == 0
    assert corollary_sum(3, 3) == 0
    assert corollary_sum(1, 1) == -1
    for a in range(2, 16):
        for b in range(2, 16):
            assert corollary_sum(a, b) == 0
            assert corollary_sum(a, b) == lambda_closed_form(a, b, 1) + lambda_closed_form(b, a, 1)


def test_okounkov_printed_case_split(okounkov):
    """The quoted case split only holds when both entries are even."""
    for r in range(2, 11):
        for s in range(2, 13 - r):
            holds = reduction_residual(okounkov, r, s, okounkov_printed_reduction(r, s)).is_zero()
            assert holds == (r % 2 == 0 and s % 2 == 0), (r, s)


def test_stuffle_examples(eulerian, okounkov):
    assert stuffle_product(okounkov, (2,), (2,)) == LinComb(BASIS_OKOUNKOV, {(2, 2): 2, (4,): 1})
    assert stuffle_product(okounkov, (2,), (3,)) == LinComb(BASIS_OKOUNKOV, {(2, 3): 1, (3, 2): 1, (5,): 1})
    assert stuffle_product(eulerian, (1,), (1,)) == LinComb(BASIS_BRACKETS, {(1, 1): 2, (2,): 1, (1,): -1})


def test_stuffle_with_empty_index(okounkov):
    assert stuffle_product(okounkov, (), (2, 3)) == LinComb.singleton(BASIS_OKOUNKOV, (2, 3))


def test_stuffle_rejects_inadmissible(okounkov):
    with pytest.raises(UnsupportedIndexError):
        stuffle_product(okounkov, (1,), (2,))


def _product_contract(family, max_weight, precision):
    indices = indices_up_to_weight(family, max_weight)
    for u in indices:
        for v in indices:
            if u.weight + v.weight > max_weight:
                continue
            expected = zq_expand(family, u, precision) * zq_expand(family, v, precision)
            found = lincomb_expand(stuffle_product(family, u, v), precision, family)
            assert found == expected, (u, v)


def test_product_contract_small(eulerian, okounkov):
    _product_contract(eulerian, 5, 20)
    _product_contract(okounkov, 6, 20)


@pytest.mark.slow
def test_product_contract_weight_eight(eulerian, okounkov):
    _product_contract(eulerian, 8, 60)
    _product_contract(okounkov, 8, 60)


def test_stuffle_commutative_and_associative(eulerian, okounkov):
    for family in (eulerian, okounkov):
        indices = indices_up_to_weight(family, 4)
        for u, v in product(indices, repeat=2):
            if u.weight + v.weight <= 6:
                assert stuffle_product(family, u, v) == stuffle_product(family, v, u)
        for u, v, w in product(indices, repeat=3):
            if u.weight + v.weight + w.weight > 6:
                continue
            single = LinComb.singleton
            left = stuffle_lincomb(family, stuffle_product(family, u, v), single(family.basis, w))
            right = stuffle_lincomb(family, single(family.basis, u), stuffle_product(family, v, w))
            assert left == right, (u, v, w)


def test_stuffle_lincomb_constants_act_as_scalars(okounkov):
    two = LinComb.constant_only(BASIS_OKOUNKOV, 2)
    z = LinComb(BASIS_OKOUNKOV, {(3,): 1}, 1)
    assert stuffle_lincomb(okounkov, two, z) == z.scale(2)


def test_closure_failure_reports_residual():
    family = family_from_mapping('lonely', {"2": ["0", "1"]})
    with pytest.raises(ClosureError) as info:
        reduction_coeffs(family, 2, 2)
    assert not info.value.residual.is_zero()
    assert (info.value.r, info.value.s) == (2, 2)
    with pytest.raises(ClosureError):
        stuffle_product(family, (2,), (2,))


def test_reduction_table_memoizes(okounkov):
    table = reduction_table(okounkov)
    first = table.get(3, 5)
    assert table.get(5, 3) is first
    assert reduction_table(okounkov) is table

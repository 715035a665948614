import json
from fractions import Fraction
from math import comb, factorial

import pytest
import sympy

from qseries.poly import Poly
from qseries.series import QSeries, geometric_pow, poly_eval_at_qpow
from qmzv.errors import UnsupportedIndexError, FamilyFormatError
from qmzv.families import (
    eulerian_poly, eulerian_numbers, bernoulli, family_eulerian, family_okounkov,
    family_from_mapping, load_custom_family, resolve_family, family_for_basis, FamilyMemo,
)


def test_eulerian_numbers_small_rows():
    assert eulerian_numbers(0) == [1]
    assert eulerian_numbers(1) == [1]
    assert eulerian_numbers(2) == [1, 1]
    assert eulerian_numbers(3) == [1, 4, 1]
    assert eulerian_numbers(4) == [1, 11, 11, 1]


@pytest.mark.parametrize("m", range(1, 11))
def test_eulerian_numbers_explicit_formula(m):
    expected = [sum((-1) ** i * comb(m + 1, i) * (k + 1 - i) ** m for i in range(k + 1))
                for k in range(m)]
    assert eulerian_numbers(m) == expected


@pytest.mark.parametrize("m", range(0, 7))
def test_eulerian_identity_reexpands(m):
    """t P_m(t) / (1-t)^(m+1) = sum d^m t^d, checked to t^50."""
    lhs = poly_eval_at_qpow(eulerian_poly(m) * Poly.monomial(1), 1, 50) * geometric_pow(1, m + 1, 50)
    assert lhs == QSeries([0] + [d ** m for d in range(1, 51)])


def test_bernoulli_matches_sympy():
    for n in range(0, 31):
        if n == 1:
            continue
        assert bernoulli(n) == Fraction(str(sympy.bernoulli(n)))
    assert bernoulli(1) == Fraction(-1, 2)


def test_eulerian_family_values(eulerian):
    assert eulerian.poly(1) == Poly.monomial(1)
    assert eulerian.poly(2) == Poly.monomial(1)
    assert eulerian.poly(4) == Poly((0, 1, 4, 1)).scale(Fraction(1, 6))


def test_eulerian_poly_degree_zero():
    """P_0 = 1, which makes Q^E_1 = t."""
    assert eulerian_poly(0).coefficients == (1,)
    assert eulerian_poly(0).degree == 0
    assert family_eulerian().poly(1) == Poly.monomial(1)


def test_eulerian_family_at_one(eulerian):
    for s in range(1, 31):
        assert eulerian.poly(s).evaluate(1) == 1
        assert eulerian.poly(s).degree == max(s - 1, 1)


def test_okounkov_family_values(okounkov):
    assert okounkov.poly(2) == Poly.monomial(1)
    assert okounkov.poly(3) == Poly((0, 1, 1))
    assert okounkov.poly(6) == Poly.monomial(3)
    for s in range(2, 20):
        assert okounkov.poly(s).evaluate(1) == (1 if s % 2 == 0 else 2)
        assert okounkov.max_degree_ok(s)
        assert okounkov.check(s)
    with pytest.raises(UnsupportedIndexError):
        okounkov.poly(1)


def test_monomial_family(monomial):
    assert monomial.poly(2) == Poly.monomial(1)
    assert monomial.poly(5) == Poly.monomial(4)
    assert monomial.min_entry == 2
    with pytest.raises(UnsupportedIndexError):
        monomial.poly(1)


def test_check_index_names_slot(okounkov):
    with pytest.raises(UnsupportedIndexError, match="slot 2") as info:
        okounkov.check_index((2, 1))
    assert info.value.entry == 1
    assert info.value.slot == 1


def test_entries_up_to(eulerian, okounkov):
    assert eulerian.entries_up_to(3) == [1, 2, 3]
    assert okounkov.entries_up_to(4) == [2, 3, 4]


def test_custom_family_from_mapping():
    family = family_from_mapping('half', {"2": ["0", "1/2", "1/2"], 3: [0, 1]})
    assert family.entries == (2, 3)
    assert family.poly(2) == Poly((0, Fraction(1, 2), Fraction(1, 2)))
    assert family.min_entry == 2
    with pytest.raises(UnsupportedIndexError):
        family.poly(4)


@pytest.mark.parametrize("mapping", [
    {"2": ["1", "1"]},
    {"2": ["0", "1", "-1"]},
    {"x": ["0", "1"]},
    {"0": ["0", "1"]},
    {"2": []},
    {"2": ["0", "0.5"]},
])
def test_custom_family_rejects_bad_input(mapping):
    with pytest.raises(FamilyFormatError):
        family_from_mapping('bad', mapping)


def test_load_custom_family(tmp_path):
    path = tmp_path / 'tiny.json'
    path.write_text(json.dumps({"2": ["0", "1"], "4": ["0", "0", "1"]}))
    family = load_custom_family(path)
    assert family.name == 'tiny'
    assert family.poly(4) == Poly.monomial(2)
    assert resolve_family(str(path)).entries == (2, 4)


def test_load_custom_family_rejects_invalid_json(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text("{not json")
    with pytest.raises(FamilyFormatError):
        load_custom_family(path)
    path.write_text("[1, 2]")
    with pytest.raises(FamilyFormatError):
        load_custom_family(path)


def test_resolve_builtin_families():
    assert resolve_family('okounkov') is family_okounkov()
    assert resolve_family('eulerian') is family_eulerian()
    assert family_for_basis('eulerian-brackets') is family_eulerian()
    with pytest.raises(FamilyFormatError):
        resolve_family('no-such-family')
    with pytest.raises(FamilyFormatError):
        family_for_basis('custom-basis')


def test_eulerian_generator_normalisation():
    """Q^E_s = t P_{s-1} / (s-1)! with integer Eulerian rows."""
    for s in range(2, 9):
        scaled = family_eulerian().poly(s).scale(factorial(s - 1))
        assert [int(c) for c in scaled.coefficients[1:]] == eulerian_numbers(s - 1)


def test_family_memo_evicts_oldest():
    memo = FamilyMemo(limit=2)
    memo.put('a', 1)
    memo.put('b', 2)
    memo.put('c', 3)
    assert len(memo) == 2
    assert memo.get('a') is None
    assert memo.get('c') == 3


def test_memos_belong_to_their_family():
    first = family_from_mapping('fam', {"2": ["0", "1"]})
    second = family_from_mapping('fam', {"2": ["0", "2"]})
    first.memo('expansion').put((2,), 'first')
    assert first.memo('expansion') is first.memo('expansion')
    assert second.memo('expansion').get((2,)) is None
    first.clear_memos()
    assert first.memo('expansion').get((2,)) is None

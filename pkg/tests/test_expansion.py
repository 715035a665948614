import gc
import json
from fractions import Fraction

import pytest

from config.settings import BASIS_BRACKETS, BASIS_OKOUNKOV
from qseries.series import QSeries
from qmzv.errors import UnsupportedIndexError
from qmzv.expansion import (
    zq_expand, zq_expand_blocked, bracket_expand, multiple_divisor_oracle,
    lincomb_expand, eisenstein, eisenstein_series, eisenstein_in_family,
    indices_up_to_weight, PRINTED_EISENSTEIN_Z_LINES,
)
from qmzv.families import load_custom_family
from qmzv.indices import Index, LinComb
from qmzv.stuffle import stuffle_product


def test_bracket_two_is_sigma_one():
    assert bracket_expand((2,), 5).coefficients == (0, 1, 3, 4, 7, 6)


def test_bracket_one_is_divisor_count():
    assert bracket_expand((1,), 4).coefficients == (0, 1, 2, 2, 3)


def test_bracket_four():
    assert bracket_expand((4,), 3).coefficients == (0, Fraction(1, 6), Fraction(3, 2), Fraction(14, 3))


def test_okounkov_small_values(okounkov):
    assert zq_expand(okounkov, (3,), 5).coefficients == (0, 1, 5, 10, 21, 26)
    assert zq_expand(okounkov, (4,), 5).coefficients == (0, 0, 1, 4, 11, 20)
    assert zq_expand(okounkov, (2, 2), 3)[3] == 1


def test_okounkov_two_equals_bracket_two(okounkov, eulerian):
    assert zq_expand(okounkov, (2,), 50) == zq_expand(eulerian, (2,), 50)


def test_empty_index_is_one(okounkov):
    assert zq_expand(okounkov, (), 10) == QSeries.constant(1, 10)


def test_inadmissible_entry_names_slot(okounkov):
    with pytest.raises(UnsupportedIndexError, match="slot 2"):
        zq_expand(okounkov, (2, 1), 5)


def test_cached_expansion_truncates(okounkov):
    long = zq_expand(okounkov, (2, 3), 30)
    short = zq_expand(okounkov, (2, 3), 12)
    assert short == long.truncate(12)


def test_reloaded_family_gets_fresh_expansions(tmp_path):
    """A family reloaded under the same name never sees the old family's series."""
    path = tmp_path / 'fam.json'
    for _ in range(20):
        path.write_text(json.dumps({"2": ["0", "1"]}))
        first = load_custom_family(path)
        assert zq_expand(first, (2,), 4)[1] == 1
        del first
        gc.collect()
        path.write_text(json.dumps({"2": ["0", "2"]}))
        second = load_custom_family(path)
        assert zq_expand(second, (2,), 4)[1] == 2


@pytest.mark.parametrize("low, high", [(7, 25), (12, 40)])
def test_precision_monotonicity(okounkov, eulerian, low, high):
    """Independent expansions at two precisions agree on their common range."""
    for family, idx in [(okounkov, (2, 3)), (okounkov, (3, 2, 2)), (eulerian, (2, 1)), (eulerian, (1, 1))]:
        family.clear_memos()
        short = zq_expand(family, idx, low)
        family.clear_memos()
        assert zq_expand(family, idx, high).truncate(low) == short
        assert zq_expand(family, idx, low, outer_range=(1, low)) == short

    def composite(n):
        okounkov.clear_memos()
        z2, z3, z4 = (zq_expand(okounkov, (k,), n) for k in (2, 3, 4))
        return z2 * z3 - z4.scale(2) + z2 * z2 * z2

    assert composite(high).truncate(low) == composite(low)

    product = stuffle_product(okounkov, (2,), (2, 3))
    okounkov.clear_memos()
    short = lincomb_expand(product, low)
    okounkov.clear_memos()
    assert lincomb_expand(product, high).truncate(low) == short


def test_oracle_examples():
    assert multiple_divisor_oracle((2,), 1) == QSeries([0, 1])
    assert multiple_divisor_oracle((1, 1), 3)[3] == 1
    assert multiple_divisor_oracle((3,), 2).coefficients == (0, Fraction(1, 2), Fraction(5, 2))


def test_oracle_matches_brackets_quick(eulerian):
    for idx in indices_up_to_weight(eulerian, 4):
        assert bracket_expand(idx, 20) == multiple_divisor_oracle(idx, 20), idx


@pytest.mark.slow
def test_oracle_matches_brackets_to_weight_six(eulerian):
    for idx in indices_up_to_weight(eulerian, 6):
        assert bracket_expand(idx, 40) == multiple_divisor_oracle(idx, 40), idx


def test_lowest_order_terms_vanish(okounkov, eulerian):
    for family in (okounkov, eulerian):
        for idx in indices_up_to_weight(family, 7):
            series = zq_expand(family, idx, 20)
            lowest = idx.length * (idx.length + 1) // 2
            assert all(series[n] == 0 for n in range(min(lowest, 21))), idx


def test_blocked_expansion_matches_single_pass(okounkov, eulerian):
    assert zq_expand_blocked(okounkov, (2, 3), 30, blocks=4, n_jobs=1) == zq_expand(okounkov, (2, 3), 30)
    assert zq_expand_blocked(eulerian, (1, 2, 1), 25, blocks=3, n_jobs=2) == bracket_expand((1, 2, 1), 25)
    assert zq_expand_blocked(okounkov, (4,), 5, blocks=50, n_jobs=1) == zq_expand(okounkov, (4,), 5)


def test_outer_range_blocks_partition(okounkov):
    whole = zq_expand(okounkov, (3, 2), 20)
    low = zq_expand(okounkov, (3, 2), 20, outer_range=(1, 7))
    high = zq_expand(okounkov, (3, 2), 20, outer_range=(8, 20))
    assert low + high == whole


def test_lincomb_expand_examples(okounkov):
    assert lincomb_expand(LinComb.constant_only(BASIS_BRACKETS, 1), 6) == QSeries.constant(1, 6)
    two_three = LinComb(BASIS_BRACKETS, {(3,): 2})
    assert lincomb_expand(two_three, 30) == zq_expand(okounkov, (3,), 30)
    four = LinComb(BASIS_BRACKETS, {(4,): 1, (2,): Fraction(-1, 6)})
    assert lincomb_expand(four, 30) == zq_expand(okounkov, (4,), 30)


def test_lincomb_expand_is_linear():
    a = LinComb(BASIS_OKOUNKOV, {(2,): 3, (2, 2): -1}, 2)
    b = LinComb(BASIS_OKOUNKOV, {(3,): Fraction(1, 2)})
    assert lincomb_expand(a + b, 15) == lincomb_expand(a, 15) + lincomb_expand(b, 15)


def test_eisenstein_constants():
    assert eisenstein(2) == LinComb(BASIS_BRACKETS, {(2,): 1}, Fraction(-1, 24))
    assert eisenstein(4).constant == Fraction(1, 1440)
    assert eisenstein(6).constant == Fraction(-1, 60480)
    with pytest.raises(ValueError):
        eisenstein(8)


def test_eisenstein_four_in_okounkov_basis():
    expected = LinComb(BASIS_OKOUNKOV, {(4,): 1, (2,): Fraction(1, 6)}, Fraction(1, 1440))
    assert eisenstein_in_family(4) == expected
    assert lincomb_expand(expected, 60) == eisenstein_series(4, 60)


def test_printed_eisenstein_lines():
    """The printed G4 line swaps Z(2) and Z(4); the G6 line holds."""
    printed_g4 = lincomb_expand(PRINTED_EISENSTEIN_Z_LINES[4], 20)
    assert printed_g4.first_mismatch(eisenstein_series(4, 20)) == 1
    assert lincomb_expand(PRINTED_EISENSTEIN_Z_LINES[6], 60) == eisenstein_series(6, 60)
    assert eisenstein_in_family(6) == PRINTED_EISENSTEIN_Z_LINES[6]
    assert eisenstein_in_family(2) == PRINTED_EISENSTEIN_Z_LINES[2]


def test_indices_up_to_weight(okounkov):
    found = indices_up_to_weight(okounkov, 7)
    assert len(found) == 20
    assert found[0] == Index((2,))
    assert found[-1] == Index((3, 2, 2))
    assert all(found[i].sort_key() < found[i + 1].sort_key() for i in range(len(found) - 1))
    assert indices_up_to_weight(okounkov, 5, min_weight=5) == [Index((5,)), Index((2, 3)), Index((3, 2))]

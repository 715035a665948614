from fractions import Fraction

import pytest

from config.settings import BASIS_OKOUNKOV
from qseries.series import QSeries, q_derive
from qmzv.errors import NoSolutionError, UnderdeterminedError, UnsupportedIndexError
from qmzv.expansion import zq_expand, bracket_expand, lincomb_expand, indices_up_to_weight
from qmzv.families import family_okounkov
from qmzv.indices import Index, LinComb
from qmzv.relations import verify_identity, relation_find, STATUS_VERIFIED, STATUS_REFUTED
from cli.serialization import load_identity

PROVEN = ['dZ2.json', 'dZ3.json', 'dZ4.json', 'dZ22.json', 'dZ33.json', 'dZ222.json',
          'G4_Z.json', 'G6_Z.json']


def _verify_file(name, precision):
    identity = load_identity(name)
    return verify_identity(identity['lhs'], identity['rhs'], precision,
                           lhs_derived=identity['lhs_derived'],
                           conjectural=identity['conjectural'], name=identity['name'])


@pytest.mark.parametrize("name", PROVEN)
def test_proven_identities_verify(name):
    record = _verify_file(name, 100)
    assert record.status == STATUS_VERIFIED
    assert record.holds
    assert record.mismatch is None


@pytest.mark.parametrize("name, exponent", [
    ('dZ2_printed.json', 3),
    ('dZ2_corrupted.json', 3),
    ('dZ23_printed.json', 3),
    ('G4_Z_printed.json', 1),
])
def test_misprinted_identities_are_refuted(name, exponent):
    record = _verify_file(name, 40)
    assert record.status == STATUS_REFUTED
    assert record.mismatch == exponent
    assert not record.holds
    assert f"first mismatch at q^{exponent}" in record.describe()


def test_sign_flip_detected():
    lhs = LinComb.singleton(BASIS_OKOUNKOV, (2,))
    rhs = LinComb(BASIS_OKOUNKOV, {(4,): 3, (2,): 1, (2, 2): 1})
    record = verify_identity(lhs, rhs, 20, lhs_derived=True)
    assert record.status == STATUS_REFUTED
    assert record.mismatch <= 20


def test_conjecture_label_at_low_precision():
    record = _verify_file('dZ23_conjecture.json', 30)
    assert record.status == 'conjectural-verified-to-30'
    assert record.conjectural and record.holds


@pytest.mark.slow
def test_conjecture_to_two_hundred():
    record = _verify_file('dZ23_conjecture.json', 200)
    assert record.status == 'conjectural-verified-to-200'


def test_describe_marks_derivative():
    record = _verify_file('dZ2.json', 10)
    assert record.describe() == "d Z(2) = 3 Z(4) - 4 Z(2,2) + Z(2): verified"


def test_relation_find_inverts_bracket_four():
    candidates = indices_up_to_weight(family_okounkov(), 4)
    result = relation_find(bracket_expand((4,), 40), candidates, BASIS_OKOUNKOV)
    assert result.combination == LinComb(BASIS_OKOUNKOV, {(4,): 1, (2,): Fraction(1, 6)})
    assert result.candidates == candidates
    assert result.precision == 40


def test_relation_find_keeps_constant():
    target = bracket_expand((4,), 20) + Fraction(1, 1440)
    result = relation_find(target, [(2,), (4,)], BASIS_OKOUNKOV)
    assert result.combination.constant == Fraction(1, 1440)


def test_relation_find_zero_target():
    result = relation_find(QSeries.zero(10), [(2,), (3,)], BASIS_OKOUNKOV)
    assert result.combination.is_zero()
    assert result.kernel_dimension == 0


def test_relation_find_zero_target_without_candidates():
    result = relation_find(QSeries.zero(5), [], BASIS_OKOUNKOV)
    assert result.combination.is_zero()


def test_relation_find_guards_precision():
    candidates = indices_up_to_weight(family_okounkov(), 4)
    target = bracket_expand((4,), 5)
    with pytest.raises(UnderdeterminedError):
        relation_find(target, candidates, BASIS_OKOUNKOV)
    forced = relation_find(target, candidates, BASIS_OKOUNKOV, force=True)
    assert lincomb_expand(forced.combination, 5) == target


def test_relation_find_no_solution():
    with pytest.raises(NoSolutionError) as info:
        relation_find(bracket_expand((1,), 10), [(2,)], BASIS_OKOUNKOV)
    assert info.value.rank == 1


def test_relation_find_rejects_inadmissible_candidates():
    with pytest.raises(UnsupportedIndexError):
        relation_find(QSeries.zero(10), [(1,)], BASIS_OKOUNKOV)


def test_relation_find_reports_kernel():
    """Z(2,2) + 2 Z(6) + 6 Z(4,2) - 3 Z(3,3) = 0 makes the weight-6 pool dependent."""
    okounkov = family_okounkov()
    candidates = [(2, 2), (6,), (4, 2), (3, 3)]
    target = zq_expand(okounkov, (6,), 30)
    result = relation_find(target, candidates, BASIS_OKOUNKOV, n_jobs=2)
    assert result.kernel_dimension == 1
    assert lincomb_expand(result.combination, 30) == target


@pytest.mark.slow
def test_rediscover_d_z23():
    """Pool relations make the answer non-unique; it differs from the shipped line by a kernel element."""
    okounkov = family_okounkov()
    target = q_derive(zq_expand(okounkov, (2, 3), 200))
    result = relation_find(target, indices_up_to_weight(okounkov, 7), BASIS_OKOUNKOV)
    assert result.kernel_dimension >= 1
    conjecture = load_identity('dZ23_conjecture.json')['rhs']
    difference = result.combination - conjecture
    assert set(difference.terms) <= set(result.candidates)
    assert difference.constant == 0
    assert lincomb_expand(difference, 200).is_zero()
    assert all(Index(idx).weight <= 7 for idx in result.combination.terms)

# q-MZV toolkit initialization
from qmzv.errors import (
    QMZVError, UnsupportedIndexError, FamilyFormatError, ClosureError,
    NotRepresentableError, CancellationError, VerificationError,
    NoSolutionError, UnderdeterminedError,
)
from qmzv.families import (
    PolyFamily, FamilyMemo, eulerian_poly, eulerian_numbers, bernoulli,
    family_eulerian, family_okounkov, family_monomial,
    family_from_mapping, load_custom_family, resolve_family, family_for_basis,
)
from qmzv.indices import Index, LinComb
from qmzv.expansion import (
    zq_expand, zq_expand_blocked, bracket_expand, multiple_divisor_oracle,
    lincomb_expand, eisenstein, eisenstein_series, eisenstein_in_family,
    indices_up_to_weight,
)
from qmzv.stuffle import (
    ReductionTable, reduction_coeffs, reduction_residual, lambda_closed_form,
    eulerian_reduction_via_formula, corollary_sum, okounkov_printed_reduction,
    stuffle_product, stuffle_lincomb,
)
from qmzv.conversion import (
    b_coeffs, monomial_slot_decomposition, slot_decompose_general,
    zq_to_brackets, family_to_brackets, oz_length_one,
    brackets_to_family, brackets_to_oz,
)
from qmzv.derivation import (
    d_bracket_representation, d_bracket_md_sharp, resolve_pair_weight_offset, d_oz_representation,
    d_symmetrized_pair, LeibnizExpansion, d_leibniz_expand,
)
from qmzv.relations import IdentityRecord, verify_identity, relation_find

__all__ = [
    'QMZVError', 'UnsupportedIndexError', 'FamilyFormatError', 'ClosureError',
    'NotRepresentableError', 'CancellationError', 'VerificationError',
    'NoSolutionError', 'UnderdeterminedError',
    'PolyFamily', 'FamilyMemo', 'eulerian_poly', 'eulerian_numbers', 'bernoulli',
    'family_eulerian', 'family_okounkov', 'family_monomial',
    'family_from_mapping', 'load_custom_family', 'resolve_family', 'family_for_basis',
    'Index', 'LinComb',
    'zq_expand', 'zq_expand_blocked', 'bracket_expand', 'multiple_divisor_oracle',
    'lincomb_expand', 'eisenstein', 'eisenstein_series', 'eisenstein_in_family',
    'indices_up_to_weight',
    'ReductionTable', 'reduction_coeffs', 'reduction_residual', 'lambda_closed_form',
    'eulerian_reduction_via_formula', 'corollary_sum', 'okounkov_printed_reduction',
    'stuffle_product', 'stuffle_lincomb',
    'b_coeffs', 'monomial_slot_decomposition', 'slot_decompose_general',
    'zq_to_brackets', 'family_to_brackets', 'oz_length_one',
    'brackets_to_family', 'brackets_to_oz',
    'd_bracket_representation', 'd_bracket_md_sharp', 'resolve_pair_weight_offset', 'd_oz_representation',
    'd_symmetrized_pair', 'LeibnizExpansion', 'd_leibniz_expand',
    'IdentityRecord', 'verify_identity', 'relation_find',
]

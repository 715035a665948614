"""
The derivation d = q d/dq on brackets and on Okounkov's q-MZVs.

d[k-2] is written in brackets through a splitting k = s1 + s2:

    binom(k-2, s1-1) d[k-2] / (k-2)
        = [s1]*[s2] - sum_{a+b=k} (binom(a-1, s1-1) + binom(a-1, s2-1)) [a,b]
          + binom(k-2, s1-1) [k-1]

Two splittings combined so that every bracket containing a 1 cancels give
d[m] inside the span of brackets with entries > 1, which converts back to
Okounkov's basis.
"""

import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb

from config.settings import (
    BASIS_BRACKETS, RESOLVED_PAIR_WEIGHT_OFFSET, CANDIDATE_PAIR_WEIGHT_OFFSETS,
    PAIR_OFFSET_CHECK_WEIGHTS, D_REPRESENTATION_CHECK_PRECISION,
)
from qseries.series import QSeries, q_derive
from qmzv.conversion import brackets_to_oz, oz_length_one
from qmzv.errors import CancellationError, VerificationError
from qmzv.expansion import bracket_expand, lincomb_expand, zq_expand
from qmzv.families import family_eulerian, family_okounkov, family_for_basis
from qmzv.indices import Index, LinComb
from qmzv.linear_solver import solve_exact
from qmzv.stuffle import reduction_coeffs, stuffle_lincomb, stuffle_product

log = logging.getLogger(__name__)


def _check_series(representation, expected, message):
    found = lincomb_expand(representation, expected.precision)
    mismatch = found.first_mismatch(expected)
    if mismatch is not None:
        raise VerificationError(message, mismatch)


def d_bracket_representation(k, s1, s2, pair_weight_offset=RESOLVED_PAIR_WEIGHT_OFFSET,
                             check_precision=None):
    """
    Bracket LinComb equal to d[k-2] using the splitting (s1, s2).

    Args:
        k: s1 + s2 (k >= 3)
        s1, s2: Splitting entries (>= 1)
        pair_weight_offset: The pair sum runs over a + b = k + offset
        check_precision: If given, verify against q_derive([k-2]) to this order

    Raises:
        VerificationError: the representation fails its series check
    """
    if s1 < 1 or s2 < 1:
        raise ValueError("s1 and s2 must be >= 1")
    if s1 + s2 != k:
        raise ValueError(f"k must equal s1 + s2, got k={k}, s1={s1}, s2={s2}")
    if k < 3:
        raise ValueError("k must be >= 3")

    eulerian = family_eulerian()
    total = k + pair_weight_offset
    rhs = stuffle_product(eulerian, Index((s1,)), Index((s2,)))
    pairs = {}
    for a in range(1, total):
        coeff = comb(a - 1, s1 - 1) + comb(a - 1, s2 - 1)
        if coeff:
            pairs[Index((a, total - a))] = -coeff
    head = comb(k - 2, s1 - 1)
    rhs = rhs + LinComb(BASIS_BRACKETS, pairs) + LinComb.singleton(BASIS_BRACKETS, (k - 1,), head)
    representation = rhs.scale(Fraction(k - 2, head))

    if check_precision is not None:
        _check_series(representation, q_derive(bracket_expand((k - 2,), check_precision)),
                      f"d[{k - 2}] via splitting ({s1}, {s2})")
    return representation


def resolve_pair_weight_offset(weights=PAIR_OFFSET_CHECK_WEIGHTS,
                               precision=D_REPRESENTATION_CHECK_PRECISION,
                               offsets=CANDIDATE_PAIR_WEIGHT_OFFSETS):
    """
    Pick the pair-sum range that makes every splitting of d[k-2] verify.

    Returns:
        The first offset passing for all k in `weights` and all splittings

    Raises:
        VerificationError: no candidate offset survives
    """
    failures = []
    for offset in offsets:
        try:
            for k in weights:
                for s1 in range(1, k):
                    d_bracket_representation(k, s1, k - s1, offset, check_precision=precision)
        except VerificationError as e:
            log.info("Pair offset %d rejected: %s", offset, e)
            failures.append((offset, e))
            continue
        log.info("Pair offset %d verified for k in %s at q^%d", offset, list(weights), precision)
        return offset
    offset, error = failures[-1]
    raise VerificationError(f"no pair offset in {list(offsets)} verifies ({error})", error.exponent)


def _has_unit_entry(index):
    return 1 in index.entries


@lru_cache(maxsize=1024)
def d_bracket_md_sharp(m):
    """
    d[m] as brackets with all entries > 1 (m >= 2).

    Combines the splittings (1, m+1) and (2, m) with weights w1 + w2 = 1
    chosen to cancel every bracket containing an entry 1.

    Raises:
        CancellationError: the two splittings cannot be combined
    """
    if m < 2:
        raise ValueError("d[m] lies in brackets with entries > 1 only for m >= 2")
    first = d_bracket_representation(m + 2, 1, m + 1)
    second = d_bracket_representation(m + 2, 2, m)
    unit_terms = sorted({i for i in list(first.terms) + list(second.terms) if _has_unit_entry(i)},
                        key=Index.sort_key)

    rows = [[Fraction(1), Fraction(1)]] + [[first.coeff(i), second.coeff(i)] for i in unit_terms]
    rhs = [Fraction(1)] + [Fraction(0)] * len(unit_terms)
    solution = solve_exact(rows, rhs)
    if not solution.consistent:
        raise CancellationError(f"splittings of d[{m}] leave terms with entry 1 (rank {solution.rank})")
    w1, w2 = solution.values
    combined = first.scale(w1) + second.scale(w2)
    survivors = [i for i in combined.terms if _has_unit_entry(i)]
    if survivors:
        raise CancellationError(f"d[{m}] keeps terms {[str(i) for i in survivors]}")
    log.debug("d[%d] = %s (weights %s, %s)", m, combined.render(), w1, w2)
    return combined


def d_oz_representation(k, check_precision=None):
    """
    d Z(k) in Okounkov's basis (k >= 2).

    Raises:
        UnsupportedIndexError: k < 2
        VerificationError: series check failure when check_precision is given
    """
    family_okounkov().check_index((k,))
    brackets = LinComb(BASIS_BRACKETS)
    for index, coeff in oz_length_one(k).terms.items():
        brackets = brackets + d_bracket_md_sharp(index[0]).scale(coeff)
    result = brackets_to_oz(brackets)
    if check_precision is not None:
        _check_series(result, q_derive(zq_expand(family_okounkov(), (k,), check_precision)),
                      f"d Z({k})")
    return result


def d_symmetrized_pair(k1, k2):
    """
    d(Z(k1,k2) + Z(k2,k1)) in Okounkov's basis, from the product
    Z(k1) Z(k2) and the Leibniz rule.
    """
    family = family_okounkov()
    family.check_index((k1, k2))
    z1 = LinComb.singleton(family.basis, (k1,))
    z2 = LinComb.singleton(family.basis, (k2,))
    result = (stuffle_lincomb(family, d_oz_representation(k1), z2)
              + stuffle_lincomb(family, z1, d_oz_representation(k2)))
    for j, value in reduction_coeffs(family, k1, k2):
        result = result - d_oz_representation(j).scale(value)
    return result


class LeibnizExpansion:
    """
    Formal sum_i f_1 ... d(f_i) ... f_n.

    Each term is (multiplicity, derived factor, other factors); identical
    terms are merged.
    """

    def __init__(self, factors, family=None):
        if len(factors) < 2:
            raise ValueError("the Leibniz expansion needs at least two factors")
        self.factors = list(factors)
        basis = self.factors[0].basis
        if any(f.basis != basis for f in self.factors):
            raise ValueError("all factors must share one basis")
        self.family = family or family_for_basis(basis)

        grouped = Counter()
        for i, derived in enumerate(self.factors):
            others = self.factors[:i] + self.factors[i + 1:]
            grouped[(derived, frozenset(Counter(others).items()))] += 1
        self.terms = []
        for (derived, others), multiplicity in grouped.items():
            expanded = [f for f, count in others for _ in range(count)]
            self.terms.append((multiplicity, derived, expanded))

    def __len__(self):
        return len(self.terms)

    def expand(self, precision):
        """Series of the formal sum; equals q_derive of the product."""
        total = QSeries.zero(precision)
        for multiplicity, derived, others in self.terms:
            part = q_derive(lincomb_expand(derived, precision, self.family))
            for f in others:
                part = part * lincomb_expand(f, precision, self.family)
            total = total + part.scale(multiplicity)
        return total

    def resolve(self, derivatives):
        """
        Replace each d(f_i) by a known LinComb and multiply out by stuffle.

        Args:
            derivatives: Mapping factor -> LinComb of d(factor), or a callable
        """
        lookup = derivatives if callable(derivatives) else derivatives.__getitem__
        result = LinComb(self.family.basis)
        for multiplicity, derived, others in self.terms:
            part = lookup(derived)
            for f in others:
                part = stuffle_lincomb(self.family, part, f)
            result = result + part.scale(multiplicity)
        return result

    def render(self):
        pieces = []
        for multiplicity, derived, others in self.terms:
            factors = " * ".join([f"d({derived.render()})"] + [f"({f.render()})" for f in others])
            pieces.append(factors if multiplicity == 1 else f"{multiplicity} * {factors}")
        return " + ".join(pieces)


def d_leibniz_expand(factors, family=None):
    return LeibnizExpansion(factors, family)

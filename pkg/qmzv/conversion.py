"""
Conversions between a family's q-MZVs and brackets with entries > 1.

Every slot factor Q_s(t)/(1-t)^s with deg Q_s <= s-1 and Q_s(0) = 0 is a
finite combination of Q^E_j(t)/(1-t)^j, 2 <= j <= s, so conversion is done
slot by slot and expanded multilinearly.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial

from config.settings import BASIS_BRACKETS
from qseries.poly import Poly
from qmzv.errors import NotRepresentableError
from qmzv.families import family_eulerian, family_okounkov
from qmzv.indices import Index, LinComb, as_index

log = logging.getLogger(__name__)


@lru_cache(maxsize=1024)
def b_coeffs(k, i):
    """
    Numbers b^k_{i,1..k-1} defined by sum_j b^k_{i,j}/j! t^j = binom(t+k-1-i, k-1).

    Args:
        k: Weight (k >= 2)
        i: Row (1 <= i <= k-1)

    Returns:
        Tuple of k-1 Fractions
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 1 <= i <= k - 1:
        raise ValueError(f"i must satisfy 1 <= i <= k-1, got i={i}, k={k}")
    poly = Poly.shifted_binomial(k - 1 - i, k - 1)
    if poly.coeff(0) != 0:
        raise ArithmeticError(f"binom(t+{k - 1 - i}, {k - 1}) has a constant term")
    return tuple(factorial(j) * poly.coeff(j) for j in range(1, k))


def monomial_slot_decomposition(i, k):
    """
    t^i = sum_{j=2}^{k} b^k_{i,j-1} (1-t)^(k-j) Q^E_j(t).

    Returns:
        [(j, coefficient)] for j = 2..k, zero coefficients included
    """
    row = b_coeffs(k, i)
    terms = [(j, row[j - 2]) for j in range(2, k + 1)]
    eulerian = family_eulerian()
    rebuilt = Poly.zero()
    for j, c in terms:
        rebuilt = rebuilt + (Poly.one_minus_t_power(k - j) * eulerian.poly(j)).scale(c)
    if rebuilt != Poly.monomial(i):
        raise ArithmeticError(f"slot decomposition of t^{i} at weight {k} does not re-check")
    return terms


def slot_decompose_general(poly, s):
    """
    Write Q(t)/(1-t)^s as sum_j lambda_j Q^E_j(t)/(1-t)^j with 2 <= j <= s.

    Raises:
        NotRepresentableError: s < 2, Q(0) != 0 or deg Q > s-1
    """
    if s < 2:
        raise NotRepresentableError(f"slot weight {s} < 2 has no bracket decomposition")
    if poly.coeff(0) != 0:
        raise NotRepresentableError(f"Q_{s} has nonzero constant term")
    if poly.degree > s - 1:
        raise NotRepresentableError(f"deg Q_{s} = {poly.degree} exceeds {s - 1}")

    totals = {}
    for i in range(1, poly.degree + 1):
        c = poly.coeff(i)
        if c == 0:
            continue
        for j, b in monomial_slot_decomposition(i, s):
            totals[j] = totals.get(j, 0) + c * b
    return sorted((j, v) for j, v in totals.items() if v != 0)


def _multilinear(slot_maps):
    """Expand a product of per-slot {entry: coeff} maps into {Index: coeff}."""
    terms = {(): Fraction(1)}
    for slot_map in slot_maps:
        grown = {}
        for prefix, c in terms.items():
            for m, value in slot_map:
                key = prefix + (m,)
                grown[key] = grown.get(key, 0) + c * value
        terms = {key: v for key, v in grown.items() if v != 0}
    return terms


def _family_slot(family, s, slot):
    poly = family.poly(s, slot)
    if not family.max_degree_ok(s):
        raise NotRepresentableError(
            f"family '{family.name}' has deg Q_{s} = {poly.degree} > {s - 1}")
    return slot_decompose_general(poly, s)


def zq_to_brackets(family, idx):
    """
    Rewrite Z_Q(idx) in brackets with all entries >= 2.

    Returns:
        LinComb in the bracket basis
    """
    idx = as_index(idx)
    family.check_index(idx.entries)
    slot_maps = [_family_slot(family, s, slot) for slot, s in enumerate(idx.entries)]
    return LinComb(BASIS_BRACKETS, {Index(k): v for k, v in _multilinear(slot_maps).items()})


def family_to_brackets(family, c):
    """LinComb-level zq_to_brackets."""
    result = LinComb.constant_only(BASIS_BRACKETS, c.constant)
    for index, coeff in c.terms.items():
        result = result + zq_to_brackets(family, index).scale(coeff)
    return result


def oz_length_one(k):
    """
    Closed form of Okounkov's Z(k) in brackets:
    rows k/2 of b^k for even k, rows (k-1)/2 and (k+1)/2 for odd k.
    """
    if k < 2:
        raise ValueError(f"argument must be >= 2, got {k}")
    m = k // 2
    rows = [b_coeffs(k, m)] if k % 2 == 0 else [b_coeffs(k, m), b_coeffs(k, m + 1)]
    terms = {Index((j,)): sum(row[j - 2] for row in rows) for j in range(2, k + 1)}
    return LinComb(BASIS_BRACKETS, terms)


def _inverse_slot(family, m):
    """
    Bracket slot [m] as a combination of the family's slot entries.

    The map s -> decomposition is triangular with diagonal Q_s(1) != 0.
    """
    memo = family.memo('inverse-slot')
    cached = memo.get(m)
    if cached is not None:
        return cached
    if m < 2:
        raise NotRepresentableError(f"bracket entry {m} is not > 1")
    if not family.supports(m):
        raise NotRepresentableError(f"family '{family.name}' does not support entry {m}")
    decomposition = dict(_family_slot(family, m, None))
    diagonal = decomposition.get(m, 0)
    if diagonal == 0:
        raise NotRepresentableError(f"family '{family.name}' has Q_{m}(1) = 0")

    result = {m: 1 / diagonal}
    for j, value in decomposition.items():
        if j == m:
            continue
        for s, c in _inverse_slot(family, j):
            result[s] = result.get(s, 0) - value * c / diagonal
    return memo.put(m, tuple(sorted((s, v) for s, v in result.items() if v != 0)))


def brackets_to_family(family, c):
    """
    Rewrite a bracket LinComb (entries > 1) in another family's basis.

    Raises:
        NotRepresentableError: an entry equal to 1, or a family that cannot
            express some slot
    """
    if c.basis != BASIS_BRACKETS:
        raise ValueError(f"expected a bracket LinComb, got basis '{c.basis}'")
    result = LinComb.constant_only(family.basis, c.constant)
    for index, coeff in c.terms.items():
        if 1 in index.entries:
            raise NotRepresentableError(f"[{index}] has an entry equal to 1")
        slot_maps = [_inverse_slot(family, m) for m in index.entries]
        converted = LinComb(family.basis, {Index(k): v for k, v in _multilinear(slot_maps).items()})
        result = result + converted.scale(coeff)
    log.debug("Converted %d bracket terms to %s", len(c.terms), family.name)
    return result


def brackets_to_oz(c):
    """Bracket LinComb with entries > 1 in Okounkov's basis."""
    return brackets_to_family(family_okounkov(), c)

"""
Expansion engine for q-analogues of multiple zeta values.

    Z_Q(s1,...,sl) = sum_{n1 > ... > nl > 0} prod_j Q_{s_j}(q^{n_j}) / (1 - q^{n_j})^{s_j}

Each slot factor is a dilation q -> q^n of one fixed series, so the kernel
works on integer-scaled coefficient vectors and divides once at the end.
"""

import logging
from fractions import Fraction
from math import factorial

import numpy as np
from joblib import Parallel, delayed

from config.settings import BASIS_BRACKETS, BASIS_OKOUNKOV, N_JOBS, JOBLIB_PREFER
from qseries.rational import common_denominator
from qseries.series import QSeries, geometric_pow, poly_eval_at_qpow
from qmzv.conversion import brackets_to_family
from qmzv.families import family_eulerian, family_okounkov, family_for_basis, bernoulli
from qmzv.indices import Index, LinComb, as_index

log = logging.getLogger(__name__)


def _slot_profile(family, s, precision, slot):
    """
    Integer coefficients of Q_s(t)/(1-t)^s up to t^precision and their scale.

    Returns:
        (numpy object array of ints c'(0..N), L) with c(d) = c'(d) / L
    """
    poly = family.poly(s, slot)
    series = poly_eval_at_qpow(poly, 1, precision) * geometric_pow(1, s, precision)
    scale = common_denominator(series.coefficients)
    ints = np.array([int(c * scale) for c in series.coefficients], dtype=object)
    return ints, scale


def _dilated_product(profile, n, acc, precision):
    """
    Truncated product of f(q^n) = sum_{d>=1} c(d) q^{nd} with the vector acc.
    """
    out = np.zeros(precision + 1, dtype=object)
    for d in range(1, precision // n + 1):
        c = profile[d]
        if c == 0:
            continue
        shift = n * d
        out[shift:] += c * acc[:precision + 1 - shift]
    return out


def _expand_range(family, entries, precision, lo, hi):
    """Sum over n1 in [lo, hi] as an exact QSeries; inner slots range freely."""
    length = len(entries)
    profiles = []
    scale = 1
    for slot, s in enumerate(entries):
        ints, slot_scale = _slot_profile(family, s, precision, slot)
        profiles.append(ints)
        scale *= slot_scale

    # acc[j] = sum of all chains starting at slot j with n_j <= current n
    acc = [np.zeros(precision + 1, dtype=object) for _ in range(length)]
    unit = np.zeros(precision + 1, dtype=object)
    unit[0] = 1

    hi = min(hi, precision)
    for n in range(1, hi + 1):
        contributions = []
        for j in range(length):
            inner = acc[j + 1] if j + 1 < length else unit
            if j + 1 < length and not inner.any():
                contributions.append(None)
                continue
            if j == 0 and n < lo:
                contributions.append(None)
                continue
            contributions.append(_dilated_product(profiles[j], n, inner, precision))
        for j, term in enumerate(contributions):
            if term is not None:
                acc[j] += term

    coeffs = [Fraction(int(v), scale) for v in acc[0]]
    return QSeries(coeffs)


def zq_expand(family, idx, precision, outer_range=None):
    """
    Expand Z_Q(idx) to precision N.

    Args:
        family: PolyFamily
        idx: Index (or anything as_index accepts)
        precision: Truncation order N >= 0
        outer_range: Optional (lo, hi) restricting the outermost summation index

    Returns:
        QSeries

    Raises:
        UnsupportedIndexError: an entry outside the family's support
    """
    idx = as_index(idx)
    if precision < 0:
        raise ValueError("precision must be >= 0")
    family.check_index(idx.entries)
    if idx.length == 0:
        if outer_range is not None:
            raise ValueError("the empty index has no outer summation")
        return QSeries.constant(1, precision)

    if outer_range is not None:
        lo, hi = outer_range
        return _expand_range(family, idx.entries, precision, lo, hi)

    memo = family.memo('expansion')
    cached = memo.get(idx.entries)
    if cached is not None and cached.precision >= precision:
        return cached if cached.precision == precision else cached.truncate(precision)

    series = _expand_range(family, idx.entries, precision, 1, precision)
    if series[0] != 0:
        raise ArithmeticError(f"nonzero constant term in expansion of {idx}")
    log.debug("Expanded %s(%s) to q^%d", family.name, idx, precision)

    current = memo.get(idx.entries)
    if current is None or current.precision < precision:
        memo.put(idx.entries, series)
    return series


def _blocks(precision, blocks):
    blocks = max(1, min(blocks, precision))
    bounds = np.linspace(0, precision, blocks + 1).round().astype(int)
    return [(int(bounds[i]) + 1, int(bounds[i + 1])) for i in range(blocks)
            if bounds[i + 1] > bounds[i]]


def zq_expand_blocked(family, idx, precision, blocks=4, n_jobs=None):
    """
    Chunked evaluation of the outer index: expand each block of n1 values
    separately and add the exact partial sums.
    """
    idx = as_index(idx)
    if idx.length == 0 or precision == 0:
        return zq_expand(family, idx, precision)
    ranges = _blocks(precision, blocks)
    parts = Parallel(n_jobs=n_jobs or N_JOBS, prefer=JOBLIB_PREFER)(
        delayed(zq_expand)(family, idx, precision, outer_range=r) for r in ranges)
    total = QSeries.zero(precision)
    for part in parts:
        total = total + part
    return total


def bracket_expand(idx, precision):
    """Bracket [s1,...,sl]: the Eulerian family's q-analogue."""
    return zq_expand(family_eulerian(), idx, precision)


def multiple_divisor_oracle(idx, precision):
    """
    Brute-force multiple divisor sums.

    The coefficient of q^n is (1/prod (s_j-1)!) times the sum over
    u1*v1 + ... + ul*vl = n with u1 > ... > ul > 0 and v_j >= 1 of prod v_j^(s_j-1).
    No series arithmetic is used.
    """
    entries = as_index(idx).entries
    if not entries:
        return QSeries.constant(1, precision)
    totals = [0] * (precision + 1)

    def walk(slot, u_bound, used, weight):
        if slot == len(entries):
            totals[used] += weight
            return
        power = entries[slot] - 1
        for u in range(1, u_bound):
            if used + u > precision:
                break
            for v in range(1, (precision - used) // u + 1):
                walk(slot + 1, u, used + u * v, weight * v ** power)

    walk(0, precision + 1, 0, 1)
    norm = 1
    for s in entries:
        norm *= factorial(s - 1)
    return QSeries([Fraction(t, norm) for t in totals])


def lincomb_expand(c, precision, family=None):
    """
    Expand constant + sum coeff * Z(term) in the family behind c.basis.

    Args:
        c: LinComb
        precision: Truncation order N
        family: PolyFamily; looked up from the basis label when omitted
    """
    family = family or family_for_basis(c.basis)
    total = QSeries.constant(c.constant, precision)
    for index in c.indices():
        total = total + zq_expand(family, index, precision).scale(c.terms[index])
    return total


_EISENSTEIN_WEIGHTS = (2, 4, 6)


def eisenstein(k):
    """
    G_k = -B_k/(2 k!) + [k] for k in {2, 4, 6}.

    Returns:
        LinComb in the bracket basis
    """
    if k not in _EISENSTEIN_WEIGHTS:
        raise ValueError(f"Eisenstein series only for k in {_EISENSTEIN_WEIGHTS}, got {k}")
    constant = -bernoulli(k) / (2 * factorial(k))
    return LinComb(BASIS_BRACKETS, {Index((k,)): 1}, constant)


def eisenstein_series(k, precision):
    return lincomb_expand(eisenstein(k), precision)


def eisenstein_in_family(k, family=None):
    """G_k rewritten in another family's basis (Okounkov by default)."""
    return brackets_to_family(family or family_okounkov(), eisenstein(k))


# Z-basis lines as they are commonly printed; the G4 line has Z(2) and Z(4)
# swapped relative to the computed expression and is kept for auditing.
PRINTED_EISENSTEIN_Z_LINES = {
    2: LinComb(BASIS_OKOUNKOV, {(2,): 1}, Fraction(-1, 24)),
    4: LinComb(BASIS_OKOUNKOV, {(2,): 1, (4,): Fraction(1, 6)}, Fraction(1, 1440)),
    6: LinComb(BASIS_OKOUNKOV, {(6,): 1, (4,): Fraction(1, 4), (2,): Fraction(1, 120)},
               Fraction(-1, 60480)),
}


def indices_up_to_weight(family, max_weight, min_weight=1):
    """
    All admissible indices with min_weight <= weight <= max_weight,
    ordered by (weight, length, lex).
    """
    found = []
    entries = family.entries_up_to(max_weight)

    def extend(prefix, weight):
        if weight >= min_weight and prefix:
            found.append(Index(prefix))
        for s in entries:
            if weight + s > max_weight:
                break
            extend(prefix + (s,), weight + s)

    extend((), 0)
    return sorted(found, key=Index.sort_key)

"""
Reduction coefficients and the quasi-shuffle (stuffle) product.

For a family Q the product of two slot polynomials has to be re-expressed as

    Q_r(t) Q_s(t) = sum_j lambda_j (1-t)^(r+s-j) Q_j(t),   j in S, 1 <= j <= r+s

which is what makes the span of the Z_Q(s1,...,sl) closed under products.
"""

import logging
import threading
from fractions import Fraction
from math import comb, factorial

from qseries.poly import Poly
from qmzv.errors import ClosureError
from qmzv.families import bernoulli, family_eulerian
from qmzv.indices import Index, LinComb, as_index
from qmzv.linear_solver import solve_exact

log = logging.getLogger(__name__)


def reduction_residual(family, r, s, coeffs):
    """Exact polynomial Q_r Q_s - sum lambda_j (1-t)^(r+s-j) Q_j."""
    residual = family.poly(r) * family.poly(s)
    for j, value in coeffs:
        residual = residual - (Poly.one_minus_t_power(r + s - j) * family.poly(j)).scale(value)
    return residual


def _solve_reduction(family, r, s):
    target = family.poly(r) * family.poly(s)
    # j descending: free variables default to 0, so the solution favours large j
    candidates = sorted(family.entries_up_to(r + s), reverse=True)
    spanning = [Poly.one_minus_t_power(r + s - j) * family.poly(j) for j in candidates]
    degree = max([target.degree] + [p.degree for p in spanning])

    rows = [[p.coeff(e) for p in spanning] for e in range(degree + 1)]
    rhs = [target.coeff(e) for e in range(degree + 1)]
    solution = solve_exact(rows, rhs)

    coeffs = sorted((j, v) for j, v in zip(candidates, solution.values) if v != 0)
    residual = reduction_residual(family, r, s, coeffs)
    if not solution.consistent or not residual.is_zero():
        raise ClosureError(family.name, r, s, residual)
    if solution.kernel_dimension:
        log.info("Reduction (%d, %d) in %s is not unique (kernel %d); using the basic solution",
                 r, s, family.name, solution.kernel_dimension)
    return coeffs


class ReductionTable:
    """
    Memoized reduction coefficients of one family.

    Entries are keyed by the unordered pair {r, s}; the first solver result
    for a pair is the one every caller sees.
    """

    def __init__(self, family):
        self.family = family
        self._lock = threading.Lock()
        self.entries = {}

    def get(self, r, s):
        """Return [(j, lambda_j), ...] sorted by j."""
        key = (min(r, s), max(r, s))
        with self._lock:
            cached = self.entries.get(key)
        if cached is not None:
            return cached
        coeffs = _solve_reduction(self.family, r, s)
        with self._lock:
            return self.entries.setdefault(key, coeffs)

    def __len__(self):
        return len(self.entries)


def reduction_table(family):
    memo = family.memo('reduction-table')
    table = memo.get(family.name)
    if table is None:
        table = memo.setdefault(family.name, ReductionTable(family))
    return table


def reduction_coeffs(family, r, s):
    """
    Coefficients lambda_j(r, s) of the reduction relation, by exact solve.

    Raises:
        UnsupportedIndexError: r or s outside the support
        ClosureError: the family admits no such relation for (r, s)
    """
    family.poly(r)
    family.poly(s)
    return reduction_table(family).get(r, s)


def lambda_closed_form(a, b, j):
    """(-1)^(b-1) binom(a+b-j-1, a-j) B_{a+b-j} / (a+b-j)! for the bracket family."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1")
    if not 1 <= j <= a:
        raise ValueError(f"j must satisfy 1 <= j <= a, got j={j}, a={a}")
    m = a + b - j
    return (-1) ** (b - 1) * comb(m - 1, a - j) * bernoulli(m) / factorial(m)


def eulerian_reduction_via_formula(r, s):
    """Bracket reduction coefficients assembled from the closed form."""
    if r < 1 or s < 1:
        raise ValueError("r and s must be >= 1")
    merged = {r + s: Fraction(1)}
    for j in range(1, r + 1):
        merged[j] = merged.get(j, 0) + lambda_closed_form(r, s, j)
    for j in range(1, s + 1):
        merged[j] = merged.get(j, 0) + lambda_closed_form(s, r, j)
    return sorted((j, v) for j, v in merged.items() if v != 0)


def corollary_sum(a, b):
    """lambda^1_{a,b} + lambda^1_{b,a} in closed form; vanishes for a, b > 1."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1")
    m = a + b - 1
    sign = (-1) ** (a - 1) + (-1) ** (b - 1)
    return sign * comb(a + b - 2, a - 1) * bernoulli(m) / factorial(m)


def okounkov_printed_reduction(r, s):
    """
    The commonly quoted case split for Okounkov's family:
    Q_{r+s} when r+s is even, 2 Q_{r+s} + (1-t)^2 Q_{r+s-2} when odd.

    Only correct when r and s are both even; the solver values are the
    ones used everywhere else.
    """
    if r < 2 or s < 2:
        raise ValueError("Okounkov entries start at 2")
    if (r + s) % 2 == 0:
        return [(r + s, Fraction(1))]
    return [(r + s - 2, Fraction(1)), (r + s, Fraction(2))]


def _stuffle(family, u, v):
    if not u:
        return LinComb.singleton(family.basis, v)
    if not v:
        return LinComb.singleton(family.basis, u)
    memo = family.memo('stuffle')
    cached = memo.get((u, v))
    if cached is not None:
        return cached
    r, s = u[0], v[0]
    result = _stuffle(family, u[1:], v).prefixed(r) + _stuffle(family, u, v[1:]).prefixed(s)
    tail = _stuffle(family, u[1:], v[1:])
    for j, value in reduction_coeffs(family, r, s):
        result = result + tail.prefixed(j).scale(value)
    return memo.put((u, v), result)


def stuffle_product(family, idx1, idx2):
    """
    Quasi-shuffle product u * v as a LinComb in the family's basis.

    Raises:
        UnsupportedIndexError: inadmissible entry
        ClosureError: from reduction_coeffs
    """
    u, v = as_index(idx1), as_index(idx2)
    family.check_index(u.entries)
    family.check_index(v.entries)
    return _stuffle(family, u.entries, v.entries)


def stuffle_lincomb(family, c1, c2):
    """Bilinear extension of the quasi-shuffle; constants act as scalars."""
    result = LinComb(family.basis)
    left = [(Index(()), c1.constant)] + list(c1.terms.items())
    right = [(Index(()), c2.constant)] + list(c2.terms.items())
    for u, a in left:
        if a == 0:
            continue
        for v, b in right:
            if b == 0:
                continue
            result = result + stuffle_product(family, u, v).scale(a * b)
    return result


def eulerian_reduction_table(max_total):
    """Solver values for all bracket pairs r <= s with r + s <= max_total."""
    family = family_eulerian()
    return {(r, s): reduction_coeffs(family, r, s)
            for r in range(1, max_total) for s in range(r, max_total - r + 1)}

"""
Polynomial families Q = {Q_s(t)} and the number sequences they need.
Eulerian brackets, Okounkov's polynomials, monomials and user-supplied families.
"""

import json
import logging
import threading
from fractions import Fraction
from math import comb, factorial
from pathlib import Path

from config.settings import (
    FAMILY_EULERIAN, FAMILY_OKOUNKOV, FAMILY_MONOMIAL,
    BASIS_BRACKETS, BASIS_OKOUNKOV, BASIS_MONOMIAL, IDENTITY_DIR, FAMILY_MEMO_LIMIT,
)
from qseries.poly import Poly
from qseries.rational import parse_rational
from qseries.series import QSeries, poly_eval_at_qpow
from qmzv.errors import UnsupportedIndexError, FamilyFormatError

log = logging.getLogger(__name__)

_eulerian_lock = threading.Lock()
_eulerian_cache = {}

_bernoulli_lock = threading.Lock()
_bernoulli_cache = [Fraction(1)]


def eulerian_poly(m):
    """
    Eulerian polynomial P_m(t), defined by t*P_m(t)/(1-t)^(m+1) = sum_{d>=1} d^m t^d.

    Computed by multiplying the truncated series sum d^m t^d with (1-t)^(m+1)
    in the series ring and reading off the polynomial part.

    Args:
        m: Nonnegative integer

    Returns:
        Poly of degree max(m-1, 0)
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    with _eulerian_lock:
        cached = _eulerian_cache.get(m)
    if cached is not None:
        return cached

    # t*P_m has degree max(m, 1); everything above it is a free self-check
    top = max(m, 1)
    precision = top + 1
    power_sums = QSeries([0] + [d ** m for d in range(1, precision + 1)])
    factor = poly_eval_at_qpow(Poly.one_minus_t_power(m + 1), 1, precision)
    product = power_sums * factor

    if product[0] != 0 or any(c != 0 for c in product.coefficients[top + 1:]):
        raise ArithmeticError(f"Eulerian identity failed for m={m}")
    result = Poly(product.coefficients[1:top + 1])

    with _eulerian_lock:
        return _eulerian_cache.setdefault(m, result)


def eulerian_numbers(m):
    """Coefficient list of P_m as integers (row m of the Eulerian triangle)."""
    return [int(c) for c in eulerian_poly(m).coefficients]


def bernoulli(n):
    """
    Bernoulli number B_n with the convention B_1 = -1/2.

    Uses the recurrence sum_{i=0}^{n} binom(n+1, i) B_i = 0 for n >= 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= n:
            k = len(_bernoulli_cache)
            total = sum(comb(k + 1, i) * _bernoulli_cache[i] for i in range(k))
            _bernoulli_cache.append(-total / (k + 1))
        return _bernoulli_cache[n]


class FamilyMemo:
    """Insertion-ordered memo table with a size limit; the oldest key goes first."""

    def __init__(self, limit=FAMILY_MEMO_LIMIT):
        self.limit = limit
        self._lock = threading.Lock()
        self._data = {}

    def get(self, key):
        with self._lock:
            return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            self._data[key] = value
            while len(self._data) > self.limit:
                del self._data[next(iter(self._data))]
        return value

    def setdefault(self, key, value):
        """Insert `value` unless `key` is present; return the stored value."""
        with self._lock:
            if key not in self._data:
                self._data[key] = value
                while len(self._data) > self.limit:
                    del self._data[next(iter(self._data))]
            return self._data.get(key, value)

    def clear(self):
        with self._lock:
            self._data.clear()

    def __len__(self):
        return len(self._data)


class PolyFamily:
    """
    A family Q = {Q_s(t)}_{s in S} of polynomials with Q_s(0)=0 and Q_s(1)!=0.

    Polynomials are generated on demand and memoized; the cache is guarded so
    concurrent callers observe a single value per s.
    """

    def __init__(self, name, supports, generator, basis=None, entries=None):
        """
        Initialize family.

        Args:
            name: Family identifier
            supports: Predicate on positive integers (the support S)
            generator: Callable s -> Poly
            basis: Basis label used for LinComb values (defaults to name)
            entries: Sorted tuple of supported entries when S is finite
        """
        self.name = name
        self.basis = basis or name
        self._supports = supports
        self._generator = generator
        self.entries = entries
        self._lock = threading.Lock()
        self._polys = {}
        self._memos = {}

    def memo(self, name):
        """Memo table `name` owned by this family (released with it)."""
        with self._lock:
            table = self._memos.get(name)
            if table is None:
                table = self._memos[name] = FamilyMemo()
            return table

    def clear_memos(self):
        """Drop every cached expansion, product and conversion of this family."""
        with self._lock:
            tables = list(self._memos.values())
        for table in tables:
            table.clear()

    def supports(self, s):
        return isinstance(s, int) and s >= 1 and bool(self._supports(s))

    @property
    def min_entry(self):
        if self.entries is not None:
            return self.entries[0] if self.entries else None
        s = 1
        while not self.supports(s):
            s += 1
        return s

    def entries_up_to(self, bound):
        """Supported entries s <= bound in increasing order."""
        if self.entries is not None:
            return [s for s in self.entries if s <= bound]
        return [s for s in range(1, bound + 1) if self.supports(s)]

    def poly(self, s, slot=None):
        """
        Return Q_s(t).

        Raises:
            UnsupportedIndexError: s outside the support
        """
        if not self.supports(s):
            raise UnsupportedIndexError(s, self.name, slot)
        with self._lock:
            cached = self._polys.get(s)
        if cached is not None:
            return cached
        poly = self._generator(s)
        with self._lock:
            return self._polys.setdefault(s, poly)

    def check(self, s):
        """True when Q_s(0) = 0 and Q_s(1) != 0."""
        q = self.poly(s)
        return q.coeff(0) == 0 and q.evaluate(1) != 0

    def max_degree_ok(self, s):
        """True when deg Q_s <= s-1 (hypothesis of the bracket conversion)."""
        return self.poly(s).degree <= s - 1

    def check_index(self, entries):
        """Raise UnsupportedIndexError naming the first inadmissible slot."""
        for slot, s in enumerate(entries):
            if not self.supports(s):
                raise UnsupportedIndexError(s, self.name, slot)

    def __repr__(self):
        return f"PolyFamily({self.name!r})"


def _eulerian_generator(s):
    return eulerian_poly(s - 1).scale(Fraction(1, factorial(s - 1))) * Poly.monomial(1)


def _okounkov_generator(s):
    if s % 2 == 0:
        return Poly.monomial(s // 2)
    return Poly.monomial((s - 1) // 2) * Poly((1, 1))


def _monomial_generator(s):
    return Poly.monomial(s - 1)


_builtin_lock = threading.Lock()
_builtin = {}


def _builtin_family(name, factory):
    with _builtin_lock:
        family = _builtin.get(name)
        if family is None:
            family = _builtin[name] = factory()
        return family


def family_eulerian():
    """Q^E_s = t P_{s-1}(t)/(s-1)! for all s >= 1 (the brackets)."""
    return _builtin_family(FAMILY_EULERIAN, lambda: PolyFamily(
        FAMILY_EULERIAN, lambda s: s >= 1, _eulerian_generator, basis=BASIS_BRACKETS))


def family_okounkov():
    """Q^O_s = t^(s/2) for even s, t^((s-1)/2)(1+t) for odd s; support s >= 2."""
    return _builtin_family(FAMILY_OKOUNKOV, lambda: PolyFamily(
        FAMILY_OKOUNKOV, lambda s: s >= 2, _okounkov_generator, basis=BASIS_OKOUNKOV))


def family_monomial():
    """Q^T_s = t^(s-1), restricted to s >= 2 so that Q_s(0) = 0 holds."""
    return _builtin_family(FAMILY_MONOMIAL, lambda: PolyFamily(
        FAMILY_MONOMIAL, lambda s: s >= 2, _monomial_generator, basis=BASIS_MONOMIAL))


def family_from_mapping(name, mapping):
    """
    Build a finite-support family from {s: [coefficients]}.

    Args:
        name: Family identifier
        mapping: Dict of s (int or decimal string) to exponent-ascending
            coefficient lists of "p/q" strings or ints

    Raises:
        FamilyFormatError: malformed entry, nonzero constant term or Q_s(1) = 0
    """
    polys = {}
    for key, coeffs in mapping.items():
        try:
            s = int(key)
        except (TypeError, ValueError):
            raise FamilyFormatError(f"family key {key!r} is not a decimal integer") from None
        if s < 1:
            raise FamilyFormatError(f"family key {s} must be a positive integer")
        if not isinstance(coeffs, list) or not coeffs:
            raise FamilyFormatError(f"Q_{s} must be a non-empty coefficient list")
        try:
            values = [parse_rational(c) if isinstance(c, str) else Fraction(c) for c in coeffs]
        except (TypeError, ValueError) as e:
            raise FamilyFormatError(f"Q_{s}: {e}") from None
        if values[0] != 0:
            raise FamilyFormatError(f"Q_{s} must have constant term \"0\"")
        poly = Poly(values)
        if poly.evaluate(1) == 0:
            raise FamilyFormatError(f"Q_{s}(1) must be nonzero")
        polys[s] = poly
    entries = tuple(sorted(polys))
    log.info("Loaded custom family %s with support %s", name, list(entries))
    return PolyFamily(name, polys.__contains__, polys.__getitem__, entries=entries)


def load_custom_family(path):
    """Read a custom family JSON file (see README for the format)."""
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            mapping = json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        raise FamilyFormatError(f"could not read family file '{path}': {e}") from None
    if not isinstance(mapping, dict):
        raise FamilyFormatError("family file must contain a JSON object")
    return family_from_mapping(path.stem, mapping)


def resolve_family(name_or_path):
    """Return a built-in family by name, or load a custom family file."""
    builtins = {
        FAMILY_EULERIAN: family_eulerian,
        FAMILY_OKOUNKOV: family_okounkov,
        FAMILY_MONOMIAL: family_monomial,
    }
    if name_or_path in builtins:
        return builtins[name_or_path]()
    path = Path(name_or_path)
    if not path.exists() and not path.is_absolute():
        candidate = IDENTITY_DIR.parent / path
        if candidate.exists():
            path = candidate
    if not path.exists():
        raise FamilyFormatError(f"unknown family '{name_or_path}' (not a built-in name or a file)")
    return load_custom_family(path)


def family_for_basis(basis):
    """Map a LinComb basis label back to its built-in family."""
    for factory in (family_eulerian, family_okounkov, family_monomial):
        family = factory()
        if basis in (family.basis, family.name):
            return family
    raise FamilyFormatError(f"basis '{basis}' has no built-in family; pass the family explicitly")

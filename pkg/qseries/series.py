"""
Truncated power series in q with exact rational coefficients.
Every other module computes in this ring.
"""

from fractions import Fraction
from math import comb

import numpy as np

from qseries.rational import as_rational, format_rational


def _fraction_array(values):
    arr = np.empty(len(values), dtype=object)
    for i, v in enumerate(values):
        arr[i] = as_rational(v)
    arr.flags.writeable = False
    return arr


class QSeries:
    """
    Truncated power series a_0 + a_1 q + ... + a_N q^N.

    Values are immutable. Binary operations on operands of different
    precision return a result at the smaller precision.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coefficients):
        """
        Initialize series.

        Args:
            coefficients: Sequence a_0..a_N (length N+1, N >= 0)
        """
        coefficients = list(coefficients)
        if not coefficients:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = _fraction_array(coefficients)

    @classmethod
    def _wrap(cls, array):
        obj = cls.__new__(cls)
        array = np.asarray(array, dtype=object)
        # Results of object-array arithmetic are Fractions already; ints only
        # appear when an operand multiplied by 0 int, so normalise cheaply.
        for i, v in enumerate(array):
            if not isinstance(v, Fraction):
                array[i] = Fraction(v)
        array.flags.writeable = False
        obj._coeffs = array
        return obj

    @classmethod
    def zero(cls, precision):
        return cls([0] * (precision + 1))

    @classmethod
    def constant(cls, value, precision):
        return cls([value] + [0] * precision)

    @classmethod
    def from_terms(cls, terms, precision):
        """Build from a mapping exponent -> coefficient, dropping exponents > N."""
        coeffs = [Fraction(0)] * (precision + 1)
        for exponent, value in terms.items():
            if 0 <= exponent <= precision:
                coeffs[exponent] += as_rational(value)
        return cls(coeffs)

    @property
    def precision(self):
        return len(self._coeffs) - 1

    @property
    def coefficients(self):
        return tuple(self._coeffs)

    def __getitem__(self, exponent):
        return self._coeffs[exponent]

    def __len__(self):
        return len(self._coeffs)

    def truncate(self, precision):
        """Return the same series known only up to q^precision."""
        if precision < 0 or precision > self.precision:
            raise ValueError(f"cannot truncate precision {self.precision} to {precision}")
        return QSeries._wrap(self._coeffs[:precision + 1].copy())

    def valuation(self):
        """Lowest exponent with a nonzero coefficient, or None for zero."""
        for n, c in enumerate(self._coeffs):
            if c != 0:
                return n
        return None

    def is_zero(self):
        return self.valuation() is None

    def _common(self, other):
        other = _coerce(other, self.precision)
        m = min(self.precision, other.precision)
        return self._coeffs[:m + 1], other._coeffs[:m + 1]

    def __add__(self, other):
        a, b = self._common(other)
        return QSeries._wrap(a + b)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._common(other)
        return QSeries._wrap(a - b)

    def __rsub__(self, other):
        a, b = self._common(other)
        return QSeries._wrap(b - a)

    def __neg__(self):
        return QSeries._wrap(-self._coeffs)

    def scale(self, factor):
        factor = as_rational(factor)
        return QSeries._wrap(self._coeffs * factor)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        a, b = self._common(other)
        m = len(a) - 1
        out = np.empty(m + 1, dtype=object)
        # truncated convolution: c_n = sum_{i<=n} a_i b_{n-i}
        for n in range(m + 1):
            out[n] = np.dot(a[:n + 1], b[n::-1])
        return QSeries._wrap(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.precision == other.precision and all(
            x == y for x, y in zip(self._coeffs, other._coeffs))

    def __hash__(self):
        return hash(tuple(self._coeffs))

    def first_mismatch(self, other, start=0):
        """
        First exponent >= start where the series differ, or None.

        Only exponents up to the smaller precision are compared.
        """
        a, b = self._common(other)
        for n in range(start, len(a)):
            if a[n] != b[n]:
                return n
        return None

    def __repr__(self):
        return f"QSeries(N={self.precision}, [{', '.join(format_rational(c) for c in self._coeffs)}])"


def _coerce(value, precision):
    if isinstance(value, QSeries):
        return value
    return QSeries.constant(value, precision)


def geometric_pow(n, s, precision):
    """
    Expansion of 1/(1-q^n)^s.

    The coefficient of q^(n*m) is binom(m+s-1, s-1); all others vanish.

    Args:
        n: Dilation (n >= 1)
        s: Power (s >= 1)
        precision: Truncation order N
    """
    if n < 1 or s < 1:
        raise ValueError("geometric_pow needs n >= 1 and s >= 1")
    coeffs = [0] * (precision + 1)
    for m in range(precision // n + 1):
        coeffs[n * m] = comb(m + s - 1, s - 1)
    return QSeries(coeffs)


def poly_eval_at_qpow(poly, n, precision):
    """
    Return P(q^n) truncated to precision N.

    Args:
        poly: Poly in t
        n: Dilation (n >= 1)
        precision: Truncation order N
    """
    if n < 1:
        raise ValueError("poly_eval_at_qpow needs n >= 1")
    coeffs = [0] * (precision + 1)
    for i, c in enumerate(poly.coefficients):
        if i * n > precision:
            break
        coeffs[i * n] = c
    return QSeries(coeffs)


def q_derive(series):
    """Apply d = q d/dq: a_n -> n * a_n, precision unchanged."""
    weights = np.arange(series.precision + 1, dtype=object)
    return QSeries._wrap(series._coeffs * weights)

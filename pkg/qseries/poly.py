"""
Exact polynomials in the formal variable t.
Coefficients are Fractions indexed by exponent; trailing zeros are trimmed.
"""

from fractions import Fraction
from math import factorial, comb

from qseries.rational import as_rational, format_rational


class Poly:
    """
    Immutable polynomial in t with rational coefficients.

    The zero polynomial has no stored coefficients and degree -1.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coefficients=()):
        """
        Build a polynomial from exponent-ascending coefficients.

        Args:
            coefficients: Iterable of ints / Fractions / "p/q" strings
        """
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, '_coeffs', tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        """Return coefficient * t^exponent."""
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        return cls([0] * exponent + [coefficient])

    @classmethod
    def one_minus_t_power(cls, k):
        """Return (1 - t)^k expanded."""
        if k < 0:
            raise ValueError("k must be >= 0")
        return cls([(-1) ** i * comb(k, i) for i in range(k + 1)])

    @classmethod
    def shifted_binomial(cls, shift, k):
        """
        Return binom(t + shift, k) = (t+shift)(t+shift-1)...(t+shift-k+1)/k!.

        Args:
            shift: Integer offset
            k: Lower binomial index (k >= 0)
        """
        if k < 0:
            raise ValueError("k must be >= 0")
        result = cls.one()
        for m in range(k):
            result = result * cls((shift - m, 1))
        return result.scale(Fraction(1, factorial(k)))

    @property
    def coefficients(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    def is_zero(self):
        return not self._coeffs

    def coeff(self, exponent):
        """Coefficient of t^exponent (0 outside the stored range)."""
        if 0 <= exponent < len(self._coeffs):
            return self._coeffs[exponent]
        return Fraction(0)

    def evaluate(self, x):
        """Evaluate at an exact value by Horner's rule."""
        x = as_rational(x)
        total = Fraction(0)
        for c in reversed(self._coeffs):
            total = total * x + c
        return total

    def scale(self, factor):
        factor = as_rational(factor)
        return Poly(c * factor for c in self._coeffs)

    def __add__(self, other):
        other = _coerce(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly((other,))._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"Poly({[format_rational(c) for c in self._coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for exponent, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if exponent == 0:
                body = format_rational(c)
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                if c == 1:
                    body = power
                elif c == -1:
                    body = f"-{power}"
                else:
                    body = f"{format_rational(c)}*{power}"
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(value):
    if isinstance(value, Poly):
        return value
    return Poly((value,))

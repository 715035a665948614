"""
Exact rational helpers.
The coefficient field everywhere is fractions.Fraction (always in lowest terms).
"""

from fractions import Fraction
from math import lcm


Rational = Fraction


def as_rational(value):
    """
    Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are rejected: every coefficient in the toolkit is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text):
    """
    Parse "p/q" or "n" into a Fraction.

    Args:
        text: String such as "-1/6", "3" or " 1 / 45 "

    Returns:
        Fraction in lowest terms
    """
    cleaned = text.strip().replace(' ', '')
    if not cleaned:
        raise ValueError("empty rational")
    if '.' in cleaned or 'e' in cleaned.lower():
        raise ValueError(f"'{text}' is not an exact rational")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"'{text}' is not a rational: {e}") from None


def format_rational(value):
    """Render a Fraction as "p/q", or "n" when integral."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def common_denominator(values):
    """Least common multiple of the denominators of `values` (1 if empty)."""
    result = 1
    for value in values:
        result = lcm(result, Fraction(value).denominator)
    return result

# Exact series kernel initialization
from qseries.rational import Rational, as_rational, parse_rational, format_rational
from qseries.poly import Poly
from qseries.series import QSeries, geometric_pow, poly_eval_at_qpow, q_derive

__all__ = [
    'Rational',
    'as_rational',
    'parse_rational',
    'format_rational',
    'Poly',
    'QSeries',
    'geometric_pow',
    'poly_eval_at_qpow',
    'q_derive'
]

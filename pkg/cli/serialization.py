"""
JSON codecs for LinComb values, series and identity files.
Rationals are always strings "p/q" (or "n"), never floats.
"""

import json
import re
from pathlib import Path

from config.settings import BASIS_BRACKETS, BASIS_OKOUNKOV, PROJECT_IDENTITY_DIR, IDENTITY_DIR
from qseries.rational import format_rational, parse_rational, as_rational
from qmzv.indices import Index, LinComb

_TERM_PATTERN = re.compile(r'^\s*(?P<d>d\s*)?(?:Z\((?P<z>[\d,\s]*)\)|\[(?P<b>[\d,\s]*)\])\s*$')


def rational_from_json(value):
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"rational must be a string or integer, got {value!r}")
    if isinstance(value, str):
        return parse_rational(value)
    return as_rational(value)


def lincomb_to_json(c):
    """Schema: {"basis", "constant", "terms": [{"index", "coeff"}]} sorted by (weight, length, lex)."""
    return {
        'basis': c.basis,
        'constant': format_rational(c.constant),
        'terms': [{'index': list(index.entries), 'coeff': format_rational(c.terms[index])}
                  for index in c.indices()],
    }


def lincomb_from_json(data):
    if not isinstance(data, dict) or 'basis' not in data:
        raise ValueError("LinComb JSON needs a 'basis' field")
    terms = {}
    for entry in data.get('terms', []):
        try:
            index = Index(entry['index'])
            coeff = rational_from_json(entry['coeff'])
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed LinComb term {entry!r}: {e}") from None
        if index in terms:
            raise ValueError(f"duplicate LinComb term {list(index.entries)}")
        terms[index] = coeff
    return LinComb(data['basis'], terms, rational_from_json(data.get('constant', '0')))


def series_to_json(series):
    return {
        'precision': series.precision,
        'coefficients': [format_rational(c) for c in series.coefficients],
    }


def resolve_data_path(path):
    """Return `path` if it exists, else look for it in the identity directories."""
    path = Path(path)
    if path.exists():
        return path
    for directory in (PROJECT_IDENTITY_DIR, IDENTITY_DIR):
        candidate = directory / path.name
        if candidate.exists():
            return candidate
    raise FileNotFoundError(f"no such file: '{path}'")


def _read_json(path):
    path = resolve_data_path(path)
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            return path, json.load(handle)
    except json.JSONDecodeError as e:
        raise ValueError(f"'{path}' is not valid JSON: {e}") from None


def load_lincomb(path):
    _, data = _read_json(path)
    return lincomb_from_json(data)


def identity_from_json(data, name=''):
    """
    Decode {"lhs": {"d": bool, "lincomb": LinComb}, "rhs": LinComb} plus the
    optional "conjectural" flag and "name".
    """
    try:
        lhs = data['lhs']
        rhs = data['rhs']
    except (KeyError, TypeError):
        raise ValueError("identity needs 'lhs' and 'rhs'") from None
    if not isinstance(lhs, dict) or 'lincomb' not in lhs:
        raise ValueError("identity 'lhs' needs a 'lincomb' field")
    return {
        'name': data.get('name', name),
        'lhs': lincomb_from_json(lhs['lincomb']),
        'lhs_derived': bool(lhs.get('d', False)),
        'rhs': lincomb_from_json(rhs),
        'conjectural': bool(data.get('conjectural', False)),
    }


def identity_to_json(lhs, rhs, lhs_derived=False, conjectural=False, name=''):
    data = {'lhs': {'d': lhs_derived, 'lincomb': lincomb_to_json(lhs)},
            'rhs': lincomb_to_json(rhs)}
    if name:
        data = {'name': name, **data}
    if conjectural:
        data['conjectural'] = True
    return data


def load_identity(path):
    path, data = _read_json(path)
    return identity_from_json(data, name=Path(path).stem)


def parse_term(text):
    """
    Parse a single target such as "d Z(2,3)", "Z(4)" or "[2,1]".

    Returns:
        (derived, basis, Index)
    """
    match = _TERM_PATTERN.match(text)
    if not match:
        raise ValueError(f"'{text}' is not of the form [d] Z(...) or [d] [...]")
    if match.group('z') is not None:
        basis, body = BASIS_OKOUNKOV, match.group('z')
    else:
        basis, body = BASIS_BRACKETS, match.group('b')
    return match.group('d') is not None, basis, Index.parse(body)

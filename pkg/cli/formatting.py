"""
Rendering of series, LinComb values and identity reports in the
text, json and table output formats.
"""

import json

import pandas as pd

from qseries.rational import format_rational
from qmzv.indices import term_label
from cli.serialization import lincomb_to_json, series_to_json


def _dump(data):
    return json.dumps(data, indent=2, sort_keys=False)


def format_series(series, fmt):
    if fmt == 'json':
        return _dump(series_to_json(series))
    if fmt == 'table':
        df = pd.DataFrame({'n': range(series.precision + 1),
                           'coeff': [format_rational(c) for c in series.coefficients]})
        return "\n".join(f"{row.n}: {row.coeff}" for row in df.itertuples(index=False))
    return ", ".join(format_rational(c) for c in series.coefficients)


def lincomb_frame(c):
    """One row per term, in display order, with the constant last."""
    rows = [{'term': term_label(c.basis, index), 'weight': index.weight,
             'length': index.length, 'coeff': format_rational(coeff)}
            for index, coeff in c.sorted_terms()]
    if c.constant != 0:
        rows.append({'term': '1', 'weight': 0, 'length': 0, 'coeff': format_rational(c.constant)})
    return pd.DataFrame(rows, columns=['term', 'weight', 'length', 'coeff'])


def format_lincomb(c, fmt):
    if fmt == 'json':
        return _dump(lincomb_to_json(c))
    if fmt == 'table':
        df = lincomb_frame(c)
        return "(empty)" if df.empty else df.to_string(index=False)
    return c.render()


def format_record(record, fmt):
    if fmt == 'json':
        return _dump({
            'name': record.name,
            'status': record.status,
            'checked_precision': record.checked_precision,
            'first_mismatch': record.mismatch,
        })
    if fmt == 'table':
        df = pd.DataFrame([{'identity': record.name or '-', 'status': record.status,
                            'N': record.checked_precision,
                            'mismatch': '-' if record.mismatch is None else record.mismatch}])
        return df.to_string(index=False)
    prefix = f"{record.name}: " if record.name else ""
    return prefix + record.describe()


def format_relation(result, fmt):
    if fmt == 'json':
        return _dump({
            'combination': lincomb_to_json(result.combination),
            'rank': result.rank,
            'kernel_dimension': result.kernel_dimension,
            'candidates': len(result.candidates),
            'precision': result.precision,
        })
    body = format_lincomb(result.combination, fmt)
    if result.kernel_dimension:
        body += f"\nkernel dimension: {result.kernel_dimension}"
    return body

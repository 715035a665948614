"""
Command-line surface: expand, product, convert, derive, verify, find-relation.
"""

import argparse
import logging
import sys
from dataclasses import dataclass

from config.settings import (
    DEFAULT_PRECISION, FAMILY_EULERIAN, FAMILY_OKOUNKOV, BASIS_BRACKETS,
    OUTPUT_FORMATS, DEFAULT_OUTPUT_FORMAT, LOG_LEVEL, LOG_FORMAT,
    EXIT_OK, EXIT_USAGE, EXIT_INADMISSIBLE, EXIT_CLOSURE, EXIT_REFUTED, EXIT_NO_SOLUTION,
)
from qseries.series import q_derive
from qmzv.errors import (
    QMZVError, UnsupportedIndexError, NotRepresentableError, ClosureError,
    VerificationError, NoSolutionError,
)
from qmzv.families import resolve_family, family_for_basis, family_okounkov
from qmzv.indices import Index, LinComb
from qmzv.expansion import zq_expand, zq_expand_blocked, lincomb_expand, indices_up_to_weight
from qmzv.stuffle import stuffle_product
from qmzv.conversion import family_to_brackets, brackets_to_family
from qmzv.derivation import d_bracket_md_sharp, d_bracket_representation, d_oz_representation
from qmzv.relations import verify_identity, relation_find
from cli.formatting import format_series, format_lincomb, format_record, format_relation
from cli.serialization import load_lincomb, load_identity, parse_term

log = logging.getLogger(__name__)

DIRECTIONS = ('oz-to-brackets', 'brackets-to-oz', 'family-to-brackets', 'brackets-to-family')


class UsageError(Exception):
    """Malformed command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class JobConfig:
    precision: int
    family: object
    output_format: str


def _job(args, default_family=FAMILY_EULERIAN):
    precision = DEFAULT_PRECISION if args.terms is None else args.terms
    if precision < 1:
        raise UsageError(f"--terms must be >= 1, got {precision}")
    family = resolve_family(getattr(args, 'family', None) or default_family)
    return JobConfig(precision, family, args.format)


def _index(text):
    return Index.parse(text)


def cmd_expand(args):
    job = _job(args)
    idx = _index(args.index)
    if args.blocks > 1:
        series = zq_expand_blocked(job.family, idx, job.precision, args.blocks, args.jobs)
    else:
        series = zq_expand(job.family, idx, job.precision)
    print(format_series(series, job.output_format))
    return EXIT_OK


def cmd_product(args):
    job = _job(args)
    left, right = _index(args.left), _index(args.right)
    if args.mode == 'series':
        series = zq_expand(job.family, left, job.precision) * zq_expand(job.family, right, job.precision)
        print(format_series(series, job.output_format))
        return EXIT_OK

    product = stuffle_product(job.family, left, right)
    print(format_lincomb(product, job.output_format))
    if args.check:
        expected = zq_expand(job.family, left, job.precision) * zq_expand(job.family, right, job.precision)
        mismatch = lincomb_expand(product, job.precision, job.family).first_mismatch(expected)
        if mismatch is not None:
            raise VerificationError("stuffle product disagrees with the series product", mismatch)
        log.info("Stuffle product checked to q^%d", job.precision)
    return EXIT_OK


def _convert_input(args, basis):
    if args.lincomb:
        return load_lincomb(args.lincomb)
    if args.index is None:
        raise UsageError("convert needs --index or --lincomb")
    return LinComb.singleton(basis, _index(args.index))


def cmd_convert(args):
    if args.direction in ('oz-to-brackets', 'brackets-to-oz') and args.family:
        raise UsageError(f"--family is implied by --direction {args.direction}")
    default = FAMILY_OKOUNKOV if args.direction.startswith('oz') or args.direction.endswith('oz') \
        else FAMILY_EULERIAN
    family = resolve_family(args.family or default)

    if args.direction in ('oz-to-brackets', 'family-to-brackets'):
        source = _convert_input(args, family.basis)
        result = family_to_brackets(family, source)
    else:
        source = _convert_input(args, BASIS_BRACKETS)
        result = brackets_to_family(family, source)
    print(format_lincomb(result, args.format))
    return EXIT_OK


def cmd_derive(args):
    if args.bracket is not None:
        k = args.bracket
        if k < 1:
            raise UsageError("--bracket needs k >= 1")
        result = d_bracket_md_sharp(k) if k >= 2 else d_bracket_representation(3, 1, 2)
        target = q_derive(zq_expand(family_for_basis(BASIS_BRACKETS), (k,), args.check)) \
            if args.check else None
    else:
        result = d_oz_representation(args.oz)
        target = q_derive(zq_expand(family_okounkov(), (args.oz,), args.check)) if args.check else None
    if target is not None:
        mismatch = lincomb_expand(result, args.check).first_mismatch(target)
        if mismatch is not None:
            raise VerificationError("derivative representation fails its series check", mismatch)
    print(format_lincomb(result, args.format))
    return EXIT_OK


def cmd_verify(args):
    precision = DEFAULT_PRECISION if args.terms is None else args.terms
    code = EXIT_OK
    for path in args.identity:
        identity = load_identity(path)
        record = verify_identity(identity['lhs'], identity['rhs'], precision,
                                 lhs_derived=identity['lhs_derived'],
                                 conjectural=identity['conjectural'],
                                 name=identity['name'])
        print(format_record(record, args.format))
        if not record.holds:
            code = EXIT_REFUTED
    return code


def cmd_find_relation(args):
    precision = DEFAULT_PRECISION if args.terms is None else args.terms
    derived, target_basis, index = parse_term(args.target)
    target = zq_expand(family_for_basis(target_basis), index, precision)
    if derived:
        target = q_derive(target)

    family = resolve_family(args.family or FAMILY_OKOUNKOV)
    max_weight = args.max_weight or index.weight + (2 if derived else 0)
    candidates = indices_up_to_weight(family, max_weight)
    result = relation_find(target, candidates, family.basis, precision, family=family,
                           force=args.force, n_jobs=args.jobs)
    print(format_relation(result, args.format))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=OUTPUT_FORMATS, default=DEFAULT_OUTPUT_FORMAT,
                        help='Output format (default: text)')
    common.add_argument('--verbose', '-v', action='store_true', help='Log progress to stderr')

    parser = _Parser(prog='qmzv', description='Exact q-MZV toolkit')
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    p = sub.add_parser('expand', parents=[common], help='Expand Z_Q(index) as a q-series')
    p.add_argument('--family', default=FAMILY_EULERIAN, help='eulerian, okounkov, monomial or a JSON file')
    p.add_argument('--index', required=True, help='Comma-separated entries ("" for the empty index)')
    p.add_argument('--terms', type=int, default=None, help='Precision N (default 100 or $QMZV_PRECISION)')
    p.add_argument('--blocks', type=int, default=1, help='Split the outer sum into this many blocks')
    p.add_argument('--jobs', type=int, default=None, help='joblib workers for blocked expansion')
    p.set_defaults(handler=cmd_expand)

    p = sub.add_parser('product', parents=[common], help='Multiply two q-MZVs')
    p.add_argument('--family', default=FAMILY_EULERIAN)
    p.add_argument('--left', required=True)
    p.add_argument('--right', required=True)
    p.add_argument('--mode', choices=('series', 'stuffle'), default='stuffle')
    p.add_argument('--terms', type=int, default=None)
    p.add_argument('--check', action='store_true', help='Verify the stuffle product by series')
    p.set_defaults(handler=cmd_product)

    p = sub.add_parser('convert', parents=[common], help='Change basis')
    p.add_argument('--direction', choices=DIRECTIONS, required=True)
    p.add_argument('--index', default=None)
    p.add_argument('--lincomb', default=None, help='JSON LinComb file')
    p.add_argument('--family', default=None, help='Family for the general directions')
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser('derive', parents=[common], help='Representation of d = q d/dq')
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument('--bracket', type=int, help='d[k] in brackets')
    target.add_argument('--oz', type=int, help="d Z(k) in Okounkov's basis")
    p.add_argument('--check', type=int, default=None, metavar='N', help='Verify by series to q^N')
    p.set_defaults(handler=cmd_derive)

    p = sub.add_parser('verify', parents=[common], help='Check identity files')
    p.add_argument('identity', nargs='+', help='Identity JSON file(s)')
    p.add_argument('--terms', type=int, default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('find-relation', parents=[common], help='Exact relation search')
    p.add_argument('--target', required=True, help='e.g. "d Z(2,3)"')
    p.add_argument('--max-weight', type=int, default=None)
    p.add_argument('--family', default=None, help='Candidate family (default okounkov)')
    p.add_argument('--terms', type=int, default=None)
    p.add_argument('--force', action='store_true', help='Allow N < 2 x candidates')
    p.add_argument('--jobs', type=int, default=None)
    p.set_defaults(handler=cmd_find_relation)
    return parser


def _configure_logging(verbose):
    level = logging.DEBUG if verbose else getattr(logging, LOG_LEVEL, logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT, force=True)


def main(argv=None):
    """Run the CLI and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _configure_logging(args.verbose)
        return args.handler(args)
    except (UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedIndexError, NotRepresentableError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except ClosureError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CLOSURE
    except VerificationError as e:
        print(f"refuted: {e}", file=sys.stderr)
        return EXIT_REFUTED
    except NoSolutionError as e:
        print(f"no solution: {e}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except QMZVError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

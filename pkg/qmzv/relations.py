"""
Identity verification and exact relation finding among q-series.
"""

import logging
from dataclasses import dataclass, field

from joblib import Parallel, delayed

from config.settings import N_JOBS, JOBLIB_PREFER, RELATION_SAFETY_FACTOR
from qseries.series import q_derive
from qmzv.errors import NoSolutionError, UnderdeterminedError, VerificationError
from qmzv.expansion import lincomb_expand, zq_expand
from qmzv.families import family_for_basis
from qmzv.indices import Index, LinComb, as_index
from qmzv.linear_solver import solve_exact

log = logging.getLogger(__name__)

STATUS_VERIFIED = 'verified'
STATUS_REFUTED = 'refuted'
STATUS_CONJECTURAL = 'conjectural-verified-to-{precision}'


@dataclass
class IdentityRecord:
    """Outcome of comparing d^e(lhs) with rhs to a fixed precision."""
    lhs: LinComb
    rhs: LinComb
    checked_precision: int
    status: str
    lhs_derived: bool = False
    conjectural: bool = False
    mismatch: int = None
    name: str = ''

    @property
    def holds(self):
        return self.status != STATUS_REFUTED

    def describe(self):
        left = self.lhs.render()
        if self.lhs_derived:
            left = f"d({left})" if len(self.lhs.terms) != 1 or self.lhs.constant else f"d {left}"
        summary = f"{left} = {self.rhs.render()}: {self.status}"
        if self.mismatch is not None:
            summary += f" (first mismatch at q^{self.mismatch})"
        return summary


def verify_identity(lhs, rhs, precision, lhs_derived=False, conjectural=False,
                    lhs_family=None, rhs_family=None, name=''):
    """
    Expand both sides to q^precision and compare every coefficient.

    Args:
        lhs: LinComb, differentiated first when lhs_derived is set
        rhs: LinComb
        precision: Truncation order N
        conjectural: Label a passing check conjectural-verified-to-N

    Returns:
        IdentityRecord
    """
    left = lincomb_expand(lhs, precision, lhs_family)
    if lhs_derived:
        left = q_derive(left)
    right = lincomb_expand(rhs, precision, rhs_family)
    mismatch = left.first_mismatch(right)

    if mismatch is not None:
        status = STATUS_REFUTED
    elif conjectural:
        status = STATUS_CONJECTURAL.format(precision=precision)
    else:
        status = STATUS_VERIFIED
    record = IdentityRecord(lhs, rhs, precision, status, lhs_derived, conjectural, mismatch, name)
    log.info("%s", record.describe())
    return record


@dataclass
class RelationResult:
    """A particular solution of a relation search and its rank evidence."""
    combination: LinComb
    rank: int
    kernel_dimension: int
    candidates: list = field(default_factory=list)
    precision: int = 0


def relation_find(target, candidates, basis, precision=None, family=None, force=False, n_jobs=None):
    """
    Find rationals c_i with constant + sum c_i Z(candidate_i) = target.

    Coefficients q^1..q^N form the equations; the constant term of the
    target becomes the constant of the combination. Free variables are
    set to zero, and the kernel dimension reports non-uniqueness.

    Args:
        target: QSeries
        candidates: Indices admissible for the basis family
        basis: LinComb basis label of the candidates
        precision: Number of coefficients used (defaults to target precision)
        force: Skip the N >= 2 * len(candidates) guard

    Raises:
        UnderdeterminedError: too few coefficients for the candidate count
        NoSolutionError: inconsistent system
    """
    family = family or family_for_basis(basis)
    precision = target.precision if precision is None else precision
    if precision > target.precision:
        raise ValueError(f"target known only to q^{target.precision}")
    ordered = sorted({as_index(c) for c in candidates}, key=Index.sort_key)
    for index in ordered:
        family.check_index(index.entries)
    if not force and precision < RELATION_SAFETY_FACTOR * len(ordered):
        raise UnderdeterminedError(
            f"{len(ordered)} candidates need at least {RELATION_SAFETY_FACTOR * len(ordered)} "
            f"coefficients, got {precision} (use force to override)")

    expansions = Parallel(n_jobs=n_jobs or N_JOBS, prefer=JOBLIB_PREFER)(
        delayed(zq_expand)(family, index, precision) for index in ordered)
    log.info("Expanded %d candidates to q^%d", len(ordered), precision)

    constant = target[0]
    if ordered:
        rows = [[series[n] for series in expansions] for n in range(1, precision + 1)]
        solution = solve_exact(rows, [target[n] for n in range(1, precision + 1)])
        rank, kernel, values, consistent = (solution.rank, solution.kernel_dimension,
                                            solution.values, solution.consistent)
    else:
        rank, kernel, values = 0, 0, []
        consistent = all(target[n] == 0 for n in range(1, precision + 1))
    if not consistent:
        raise NoSolutionError("target is not in the span of the candidates", rank, kernel)

    combination = LinComb(basis, dict(zip(ordered, values)), constant)
    found = lincomb_expand(combination, precision, family)
    mismatch = found.first_mismatch(target.truncate(precision))
    if mismatch is not None:
        raise VerificationError("relation does not reproduce the target", mismatch)
    if kernel:
        log.warning("Relation is not unique: kernel dimension %d among %d candidates",
                    kernel, len(ordered))
    return RelationResult(combination, rank, kernel, ordered, precision)

"""
Exception hierarchy for the q-MZV toolkit.
The CLI maps each class to a stable exit code.
"""


class QMZVError(Exception):
    """Base class for all toolkit errors."""


class UnsupportedIndexError(QMZVError):
    """An index entry lies outside the family's support."""

    def __init__(self, entry, family, slot=None):
        self.entry = entry
        self.family = family
        self.slot = slot
        where = f" at slot {slot + 1}" if slot is not None else ""
        super().__init__(f"index entry {entry}{where} is not supported by family '{family}'")


class FamilyFormatError(QMZVError):
    """A custom polynomial family violates Q_s(0)=0 / Q_s(1)!=0 or is malformed."""


class ClosureError(QMZVError):
    """Q_r * Q_s has no expansion in the spanning set of the reduction relation."""

    def __init__(self, family, r, s, residual):
        self.family = family
        self.r = r
        self.s = s
        self.residual = residual
        super().__init__(
            f"family '{family}' is not closed for (r, s) = ({r}, {s}); residual polynomial: {residual}")


class NotRepresentableError(QMZVError):
    """A bracket or polynomial cannot be converted into the requested basis."""


class CancellationError(QMZVError):
    """Terms with an entry equal to 1 survived the combination of two splittings."""


class VerificationError(QMZVError):
    """A representation failed its series check."""

    def __init__(self, message, exponent=None):
        self.exponent = exponent
        if exponent is not None:
            message = f"{message} (first mismatch at q^{exponent})"
        super().__init__(message)


class NoSolutionError(QMZVError):
    """The exact linear system of a relation search is inconsistent."""

    def __init__(self, message, rank=None, kernel_dimension=None):
        self.rank = rank
        self.kernel_dimension = kernel_dimension
        super().__init__(f"{message} (rank {rank}, kernel dimension {kernel_dimension})")


class UnderdeterminedError(QMZVError):
    """Too few coefficients to make a relation search meaningful."""

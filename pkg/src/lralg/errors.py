"""Exception taxonomy.

Operations that merely report (validators, checkers) return report
objects and raise nothing; exceptions are reserved for violated
preconditions and malformed input.  InternalConsistencyError marks
conditions that are mathematically impossible when the preconditions
hold, so seeing one means a bug, not bad input.
"""


class LrAlgError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(LrAlgError):
    """Operands have incompatible shapes or ambient dimensions."""


class NonCommutingFamilyError(LrAlgError):
    """A joint Fitting split was requested for operators that do not commute."""


class InvalidLieAlgebraError(LrAlgError):
    """Structure constants fail antisymmetry or the Jacobi identity."""


class NotAnIdealError(LrAlgError):
    """The given subspace is not a Lie ideal."""


class NotTwoSidedIdealError(LrAlgError):
    """The given subspace is not stable under the product from both sides."""


class NotLrProductError(LrAlgError):
    """The product fails the LR identities or compatibility with the bracket."""


class NotNilpotentError(LrAlgError):
    """The Lie algebra is not nilpotent."""


class NotTwoStepNilpotentError(LrAlgError):
    """The Lie algebra is not nilpotent of class at most two."""


class NotTwoStepSolvableError(LrAlgError):
    """The Lie algebra is not solvable of derived length at most two."""


class PhiNotZeroError(LrAlgError):
    """The quotient product does not vanish under the lifting map."""


class NotGeneratedError(LrAlgError):
    """The given elements do not generate the Lie algebra."""


class PreconditionError(LrAlgError):
    """A stated precondition of an operation does not hold."""


class UnknownFixtureError(LrAlgError):
    """No catalog entry under that name."""


class FileFormatError(LrAlgError):
    """Malformed algebra file; the message carries a field diagnostic."""


class InternalConsistencyError(LrAlgError):
    """A condition that should be impossible was observed; report as a bug."""

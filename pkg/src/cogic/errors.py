"""Exception types raised by the region evaluators and the CLI."""


class CogicError(Exception):
    """Base class for all package errors."""


class PreconditionError(CogicError, ValueError):
    """An input violates the regime or shape an operation requires."""


class InfeasibleSystem(PreconditionError):
    """Even the origin violates a row of a 2-D rate system."""


class UnboundedRegion(PreconditionError):
    """A 2-D rate system does not bound the rates from above."""


class NegativeArgument(PreconditionError):
    pass


class ZeroGain(PreconditionError):
    pass


class WeakInterference(PreconditionError):
    """Raised when an operation needs b >= 1 but got b < 1."""


class StrongInterference(PreconditionError):
    """Raised when an operation needs weak interference but got a larger b."""


class ParameterRegime(PreconditionError):
    pass


class RegimeBoundary(PreconditionError):
    """The K^2 threshold is undefined because b^2 >= 1 + P2."""


class NonpositiveLogArgument(PreconditionError):
    pass


class UnknownVariable(PreconditionError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class MissingAuxiliary(PreconditionError):
    pass


class SubstitutionInconsistent(PreconditionError):
    pass


class NotDeterministic(PreconditionError):
    pass


class AlphabetMismatch(PreconditionError):
    pass

"""Exception types raised by boolclt.

All of them derive from :class:`BoolCLTError`, itself a ``ValueError``, so
callers that only care about "bad input or numerically invalid result" can
catch one thing.
"""


class BoolCLTError(ValueError):
    pass


class InvalidArgument(BoolCLTError):
    pass


class InvalidMeasure(BoolCLTError):
    pass


class DegenerateMeasure(InvalidMeasure):
    pass


class PreconditionViolation(BoolCLTError):
    pass


class RootStructureViolation(BoolCLTError):
    """The polynomial does not have the promised all-real, simple roots."""


class PoleEvaluation(BoolCLTError):
    pass


class NotAMeasure(BoolCLTError):
    """A rational function failed to invert to a probability measure."""


class PrecisionFailure(BoolCLTError):
    pass


class StructureViolation(BoolCLTError):
    pass

"""Exception hierarchy shared by all modules."""


class NPLabelError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(NPLabelError):
    """An argument violates a documented precondition (wrong range, wrong length)."""


class LabelingInvalid(NPLabelError):
    """A labeling is not a bijection onto {1..n}."""


class InvalidSpec(NPLabelError):
    """A family parameter is outside its allowed range."""


class UnsupportedParameters(NPLabelError):
    """A constructive labeler has no formula for these parameters; the
    exact searcher is the fallback."""


class UnsupportedStructure(NPLabelError):
    """A graph does not have the structure a labeler requires."""


class PreconditionViolated(NPLabelError):
    """A transformation's precondition fails; the message names the clause."""


class ParseError(NPLabelError):
    """Malformed input file; carries a line number when available."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line

"""Exception hierarchy shared by the kernel and the CLI."""


class CwlabError(Exception):
    """Base class for all errors raised by cwlab."""


class UsageError(CwlabError, ValueError):
    """Invalid arguments: wrong dimension, out-of-range parameter, bad input file."""


class NumericError(CwlabError):
    """A numeric procedure could not produce a certified answer."""


class EmptyBody(NumericError):
    """A ball intersection has no common point."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class SolverFailure(NumericError):
    """The iterative support solver did not reach its certificate."""

    def __init__(self, message, residual):
        super().__init__(f"{message} (residual={residual:.3e})")
        self.residual = residual


class UnsupportedQuery(CwlabError):
    """The query cannot be answered for this kind of body node."""


class PreconditionError(CwlabError):
    """An operation's precondition failed; ``report`` carries the evidence."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report

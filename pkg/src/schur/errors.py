"""Exception hierarchy shared by every module.

The CLI maps each family to its own exit code, so callers can tell a bad
input apart from an exhausted budget or a misbehaving external solver.
"""


class SchurError(Exception):
    """Base class for all errors raised by this package."""


class ContractError(SchurError, ValueError):
    """A precondition was violated by the caller."""


class MalformedCertificateError(SchurError, ValueError):
    """A coloring does not fit its problem (bad color index, wrong length...)."""


class CertificateError(SchurError):
    """A claimed witness fails verification."""


class ResourceError(SchurError):
    """A work budget was exhausted before an answer was reached.

    ``partial`` carries whatever was established before giving up.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class SolverUnknownError(ResourceError):
    """The SAT solver stopped without deciding the formula."""


class SolverProtocolError(SchurError):
    """An external solver produced output that could not be interpreted."""

    def __init__(self, message, output=""):
        super().__init__(message)
        self.output = output


class SolverNotFoundError(SchurError, OSError):
    """The external solver executable does not exist."""


class EncodingSoundnessError(SchurError):
    """A model decoded from the CNF encoding is not a valid coloring."""


class DimacsParseError(SchurError, ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InconclusiveError(SchurError):
    """A verification probe ended with an unknown solver outcome."""

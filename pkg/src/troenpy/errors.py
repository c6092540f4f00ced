"""Exception hierarchy shared across the toolkit.

All library errors derive from ToolkitError so callers (notably the CLI)
can map them to a single exit code without enumerating modules.
"""


class ToolkitError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(ToolkitError, ValueError):
    """A structured input (distribution, joint table, matrix, corpus)
    violates its invariants."""


class DomainError(ToolkitError, ValueError):
    """A scalar argument lies outside the documented domain."""


class CorpusFormatError(ValidationError):
    """A corpus file could not be parsed; the message carries the line number."""


class PSDViolationError(ValidationError):
    """A density matrix has an eigenvalue below the tolerated floor."""

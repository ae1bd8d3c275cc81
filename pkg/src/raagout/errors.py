"""Exception taxonomy shared across the package."""


class InputError(ValueError):
    """An argument lies outside an operation's domain."""


class ParseError(InputError):
    """A graph document is malformed; carries position information when known."""

    def __init__(self, message, line=None, column=None):
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + location)
        self.line = line
        self.column = column


class PreconditionError(InputError):
    """A theorem-backed operation was invoked outside its hypotheses."""


class UnsupportedCaseError(Exception):
    """A rewriting rule has no applicable case; raised instead of guessing."""


class InternalCheckError(RuntimeError):
    """A post-hoc consistency check failed; indicates a defect, never returned silently."""

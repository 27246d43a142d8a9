"""Exception types shared across the package."""


class InvalidSystemError(ValueError):
    """Malformed alphabet, morphism, axiom set, or system file."""


class ParseError(InvalidSystemError):
    """System-file syntax error, with an optional 1-based line number."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class PreconditionError(ValueError):
    """An operation was called outside its stated preconditions."""


class ErasingMorphismError(PreconditionError):
    """An analysis that requires a non-erasing morphism got an erasing one."""


class NotInLanguageError(PreconditionError):
    """A word required to belong to the system language does not."""

class ValidationError(ValueError):
    """An input violates a structural invariant.

    ``field`` names the offending input field when there is one.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class ParseError(ValueError):
    """Raised when an instance file is not well-formed structured text."""


class TheoremViolation(RuntimeError):
    """The hypotheses of the strong-instability theorem hold but the engine
    found a catalog-semistable polarization. Indicates a bug."""

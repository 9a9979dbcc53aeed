class ValidationError(ValueError):
    """Malformed input: bad file line, invalid relation, out-of-range vertex."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConsistencyError(RuntimeError):
    """Two independent computations that must agree did not."""

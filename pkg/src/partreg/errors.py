class PartregError(ValueError):
    """Base class for invalid input to any partreg operation."""


class DegenerateEquationError(PartregError):
    pass


class MalformedCertificateError(PartregError):
    pass


class SearchLimitExceeded(RuntimeError):
    """Raised when a search hits its node cap.

    ``partial`` carries the progress made so far: the deepest avoider found
    and the number of nodes visited.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial

"""Exception hierarchy shared by the library and the command line."""


class IntervalError(ValueError):
    """A vertex specification does not describe a closed staircase interval."""


class NonMonotoneChain(IntervalError):
    pass


class ChainsEndpointMismatch(IntervalError):
    pass


class EmptyRegion(IntervalError):
    pass


class NonRectilinearEdge(IntervalError):
    pass


class ShapeMismatch(ValueError):
    pass


class SizeLimitError(RuntimeError):
    """Base class for brute-force routines refusing oversized inputs."""


class TooManyComponents(SizeLimitError):
    pass


class SizeLimitExceeded(SizeLimitError):
    pass


class ParseError(ValueError):
    def __init__(self, location, message):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ValidationError(ParseError):
    """A syntactically fine document whose intervals fail validation."""

    def __init__(self, location, cause):
        self.cause = cause
        super().__init__(location, f"{type(cause).__name__}: {cause}")

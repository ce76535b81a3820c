"""Exception types raised across the package."""


class BandwidthKitError(Exception):
    """Base class for all package errors."""


class InvalidTreeError(BandwidthKitError, ValueError):
    pass


class InvalidLayoutError(BandwidthKitError, ValueError):
    pass


class InvalidVertexError(BandwidthKitError, ValueError):
    pass


class PreconditionError(BandwidthKitError, ValueError):
    """An algorithm was called outside its documented input domain."""


class NotACaterpillarError(BandwidthKitError, ValueError):
    pass


class ParameterError(BandwidthKitError, ValueError):
    pass


class TooLargeError(BandwidthKitError, ValueError):
    """An instance exceeds a size guard.

    ``total`` carries the computed size when one is available.
    """

    def __init__(self, message, total=None):
        super().__init__(message)
        self.total = total


class FormatError(BandwidthKitError, ValueError):
    """Parse failure in one of the text formats; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line

"""Exception hierarchy shared by all modules."""


class HyperpartError(Exception):
    """Base class for all errors raised by this package."""


class InvalidConfig(HyperpartError):
    """A point configuration or instance document failed validation."""


class DomainError(HyperpartError):
    """An operation was called outside its stated preconditions."""


class VerificationError(HyperpartError):
    """A computationally verified postcondition failed.

    These postconditions hold by proven mathematics; a failure indicates an
    implementation bug, never a property of the input.
    """

"""Exception types raised by transcendent_lab."""


class LabError(Exception):
    """Base class for every error raised by this package."""


class DomainError(LabError, ValueError):
    """Argument outside the domain an operation is defined on."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class HypothesisError(DomainError):
    """Arguments violate the hypothesis a series representation needs."""


class ContinuationRequired(DomainError):
    """The defining series diverges here; use the continued function instead."""


class ArityError(LabError, ValueError):
    """Too few inputs for the requested method."""


class UnsupportedError(LabError, ValueError):
    """Request lies outside what this implementation supports by policy."""

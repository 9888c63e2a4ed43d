"""Exception types shared across the package."""


class TsingError(ValueError):
    """Base class for all errors raised by :mod:`tsing`."""


class InputError(TsingError):
    """Malformed input: bad syntax, out-of-range values, inconsistent data."""


class DomainError(TsingError):
    """Well-formed input outside an operation's domain (e.g. a non-T chain)."""

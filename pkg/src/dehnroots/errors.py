"""Exception types shared across the package."""


class DehnrootsError(Exception):
    """Base class for all library errors."""


class InvalidInput(DehnrootsError):
    """An argument violates a documented precondition."""


class NotInvertible(DehnrootsError):
    """Requested a modular inverse of a non-unit."""


class InvalidDataSet(DehnrootsError):
    """An operation requires a valid data set but was given an invalid one."""


class TypeMismatch(DehnrootsError):
    """Two data sets of different types were compared."""


class DimMismatch(DehnrootsError):
    """Matrix dimensions do not agree."""


class SearchCapExceeded(DehnrootsError):
    """An exhaustive search was requested beyond the supported size cap."""


class Unconstructible(DehnrootsError):
    """No data set of the requested shape exists."""

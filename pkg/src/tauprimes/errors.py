"""Exception types shared across the package."""

from __future__ import annotations


class BudgetExceededError(ValueError):
    """A requested computation exceeds its configured resource ceiling."""


class DegenerateDiscriminantError(ValueError):
    """tau(p)^2 >= 4*p^11, so the local roots are not a complex-conjugate pair."""


class MissingPrimeError(KeyError):
    """A needed tau(p) value is absent from the supplied prime table."""

    def __init__(self, prime: int):
        super().__init__(prime)
        self.prime = prime

    def __str__(self) -> str:
        return f"tau({self.prime}) is not available in the supplied prime table"


class CacheError(ValueError):
    """Base class for tau-cache file problems; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CacheVersionError(CacheError):
    """The cache header names a format version this reader does not speak."""


class CacheTruncatedError(CacheError):
    """The cache ends before the promised number of records."""


class CacheMalformedError(CacheError):
    """A cache line does not match the required record layout."""

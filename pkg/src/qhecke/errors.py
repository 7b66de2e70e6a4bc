"""Exception types and size guards shared across the package."""

from __future__ import annotations

import os


class QHeckeError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QHeckeError, ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(QHeckeError, ValueError):
    """An input object violates the structural precondition of an operation."""


class MalformedFillingError(PreconditionError):
    """A filling handed to a standard-family check does not use 1..n exactly once."""


class ResourceLimitError(QHeckeError):
    """The requested computation exceeds a configured size guard."""


class CertificateError(QHeckeError):
    """A verification that a theorem guarantees has failed."""


def size_limit(default: int) -> int:
    env = os.environ.get("QHECKE_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"QHECKE_MAX_N must be an integer, got {env!r}") from None
    return default


def guard(size: int, default: int, what: str) -> None:
    limit = size_limit(default)
    if size > limit:
        raise ResourceLimitError(
            f"{what}: size {size} exceeds limit {limit} (set QHECKE_MAX_N to raise it)"
        )

"""Exception types and the global enumeration size cap."""

from __future__ import annotations

import os

DEFAULT_SIZE_CAP = 24

# Environment override for experimentation only; anything above 24 is
# unsupported and can exhaust memory (every kernel enumerates 2^n states).
SIZE_CAP_ENV = "GHW_SIZE_CAP"


def size_cap() -> int:
    """Current length cap (default 24, overridable via GHW_SIZE_CAP)."""
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_SIZE_CAP


class GhwError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(GhwError):
    """An operation would enumerate past the size cap."""


class LengthCapExceeded(CapExceeded):
    """Ambient length n exceeds the cap."""


class ZeroCode(GhwError):
    """Generator matrix has rank 0."""


class EmptyAmbient(GhwError):
    """Monomial ideal requested in a ring with no variables."""


class TooFewGenerators(GhwError):
    """Operation needs at least two generators / test-set elements."""


class DimensionTooSmall(GhwError):
    """Operation needs code dimension k >= 2."""


class MatrixParseError(GhwError):
    """Malformed matrix file; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class TheoremViolation(GhwError):
    """A proven statement failed on concrete data: an implementation bug."""

"""Exception types shared across the package."""

from __future__ import annotations


class ReconError(Exception):
    """Base class for all errors raised by t3recon."""


class GraphFormatError(ReconError, ValueError):
    """Malformed graph6, edge-list or k-set input.

    ``offset`` is a byte offset (graph6) and ``line`` a 1-based line number
    (text formats); whichever applies is set.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if offset is not None:
            where.append(f"byte {offset}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


class UnsupportedSizeError(ReconError, ValueError):
    pass


class PromiseViolation(ReconError):
    """The input does not come from a member of the promised graph class."""


class ClassificationError(ReconError):
    """No roughly-neighbour-set scenario matches; carries the offending element."""

    def __init__(self, message: str, element: frozenset[int] | None = None):
        super().__init__(message)
        self.element = element


class BoundExceeded(ReconError):
    """An exhaustive sweep was requested beyond its configured bound."""

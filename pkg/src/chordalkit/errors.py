"""Exception types shared across the package."""

from __future__ import annotations


class ChordalkitError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertex(ChordalkitError):
    """A vertex id is outside the valid range 1..n."""


class SelfLoop(ChordalkitError):
    """An edge joins a vertex to itself."""


class GraphTooLarge(ChordalkitError):
    """The requested vertex count exceeds the configured cap."""


class InvalidOrdering(ChordalkitError):
    """A vertex sequence is not a permutation of 1..n."""


class InvalidSize(ChordalkitError):
    """A generator size parameter is out of range."""


class InvalidProbability(ChordalkitError):
    """An edge probability is not within [0, 1]."""


class ParseError(ChordalkitError):
    """A text input could not be parsed.

    Carries the 1-based line number when one is known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VerdictMismatch(ChordalkitError):
    """Two recognition pipelines disagreed on the same input graph."""


class PhaseTaskError(ChordalkitError):
    """A vertex task raised inside a phase program.

    Wraps the original exception and records where it happened.
    """

    def __init__(self, phase: int, vertex: int, cause: BaseException):
        super().__init__(f"task for vertex {vertex} failed in phase {phase}: {cause!r}")
        self.phase = phase
        self.vertex = vertex
        self.__cause__ = cause

"""Exception types shared across the library.

Two families matter:

* ``PreconditionFailed`` (a ``ValueError``): the caller handed an operation
  an input outside its contract.  Subclasses carry a structured witness of
  the offending feature where one exists.

* ``StructureViolation``: the input satisfied the stated preconditions but a
  structural claim the construction relies on failed anyway.  These are
  first-class findings, not crashes; the exception carries the evidence so a
  caller can log or report it.
"""

from __future__ import annotations


class PreconditionFailed(ValueError):
    """An operation's input contract was violated."""


class MinDegreeTooLow(PreconditionFailed):
    """The graph's minimum degree is below what the operation requires."""


class NotCubic(PreconditionFailed):
    """The operation requires a 3-regular graph."""


class ClawFound(PreconditionFailed):
    """A claw-free input was required; carries the induced-claw witness."""

    def __init__(self, witness, message: str | None = None):
        self.witness = witness
        super().__init__(message or f"induced claw found: {witness}")


class C4Found(PreconditionFailed):
    """A C4-free input was required; carries a 4-cycle witness."""

    def __init__(self, cycle, message: str | None = None):
        self.cycle = cycle
        super().__init__(message or f"4-cycle found: {cycle}")


class CutVertexFound(PreconditionFailed):
    """The queried vertex is a cut vertex."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is a cut vertex")


class StructureViolation(Exception):
    """A structural claim failed on a qualifying input.

    ``evidence`` holds whatever concrete configuration demonstrates the
    failure (offending vertices, candidate sets, the input graph, ...).
    """

    def __init__(self, message: str, evidence=None):
        self.evidence = evidence
        super().__init__(message)


class NoTriangleAt(StructureViolation):
    """A vertex of a cubic claw-free C4-free graph lies in no triangle."""

    def __init__(self, vertex: int, evidence=None):
        self.vertex = vertex
        super().__init__(f"no triangle contains vertex {vertex}", evidence)


class MultiLink(StructureViolation):
    """Two triangles of a decomposition are joined by more than one edge."""

    def __init__(self, pair, evidence=None):
        self.pair = pair
        super().__init__(f"triangles {pair} joined by multiple edges", evidence)


class TargetMissing(StructureViolation):
    """No qualifying cycle-length target exists in a required interval."""


class Graph6Error(ValueError):
    """Malformed graph6 text."""

"""Exception types shared across the library.

Precondition violations (bad user input) and internal invariant failures
are kept apart so the CLI can map them to different exit codes.
"""

from __future__ import annotations


class GraphError(Exception):
    """Base class for all library errors."""


class ParseError(GraphError):
    """Malformed graph document; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotSimple(GraphError):
    """Operation requires a simple graph but got loops or parallel edges."""


class NotCubic(GraphError):
    """Some vertex does not have degree 3."""

    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 3")
        self.vertex = vertex
        self.degree = degree


class NotClawFree(GraphError):
    """An induced claw was found; the witness is attached."""

    def __init__(self, claw):
        super().__init__(f"induced claw at center {claw.center} with leaves {claw.leaves}")
        self.claw = claw


class NotTwoEdgeConnected(GraphError):
    """Graph is disconnected or has a bridge; the witness bridge is attached when one exists."""

    def __init__(self, message: str, bridge: int | None = None):
        super().__init__(message)
        self.bridge = bridge


class InvalidBase(GraphError):
    """Base multigraph fails the cubic / 2-edge-connected / loop-free contract."""


class ParallelCollision(GraphError):
    """Expansion produced parallel edges (degenerate base, defensively checked)."""


class StructureViolation(GraphError):
    """Internal decomposition invariant failed on input that passed validation."""


class CapExceeded(GraphError):
    """Enumeration would exceed the caller's cap; carries the required count."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"enumeration needs {required} items, cap is {cap}")
        self.required = required
        self.cap = cap


class NoTwoFactor(GraphError):
    """No 2-factor exists (unreachable for cubic bridgeless hosts)."""


class DegreeViolation(GraphError):
    """An edge set violates the degree contract of its role."""


class BoundFailure(GraphError):
    """Certificate fell below the exponential bound; fatal, carries a dump."""

    def __init__(self, message: str, dump: str = ""):
        super().__init__(message if not dump else f"{message}\n{dump}")
        self.dump = dump

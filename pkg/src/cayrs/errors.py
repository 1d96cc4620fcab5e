"""Engine error hierarchy.

Input problems (malformed linkage descriptions) raise InvalidLinkage or one
of its subclasses; everything else is a domain error on structurally valid
input.  All errors carry a machine-readable ``name`` used by the CLI and
service layers.
"""

from __future__ import annotations


class CayrsError(Exception):
    """Base class for all engine errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class InvalidLinkage(CayrsError):
    """Malformed linkage description (schema or invariant violation)."""


class ClusterShareViolation(InvalidLinkage):
    """A rigid cluster shares a number of vertices other than two with the rest."""


class DegenerateCluster(InvalidLinkage):
    """Cluster anchors coincide in local coordinates."""


class NotTreeDecomposable(CayrsError):
    """No construction sequence exists from the given base non-edge."""


class NotOneDof(CayrsError):
    """Edge/vertex count is incompatible with a one-degree-of-freedom linkage."""


class NotLowComplexity(CayrsError):
    """Operation requires a linkage that passed the low-complexity check."""


class Unrealizable(CayrsError):
    """Circle intersection failed at a construction step."""

    def __init__(self, step: int, message: str | None = None):
        self.step = step
        super().__init__(message or f"circles do not intersect at step {step}")


class AmbiguousZeroSign(CayrsError):
    """Sign 0 requested for a step whose discriminant is not near zero."""

    def __init__(self, step: int):
        self.step = step
        super().__init__(f"step {step}: sign 0 requested but step is not collinear")


class MismatchedLinkage(CayrsError):
    """Realizations belong to different linkages or base non-edges."""


class NotRealizable(CayrsError):
    """Requested Cayley configuration lies outside every oriented interval."""


class NotConnected(CayrsError):
    """No continuous motion path exists; carries the two components and the
    nearest sampled realization pair."""

    def __init__(self, component1, component2, nearest):
        self.component1 = component1
        self.component2 = component2
        self.nearest = nearest  # (Realization, Realization, distance)
        super().__init__("realizations lie in different connected components")


class TooManySteps(CayrsError):
    """Canonical type enumeration would exceed the configured cap."""


class NonedgeNotInVector(CayrsError):
    """Requested projection non-edge is not in the complete Cayley vector."""


class UnknownVertex(CayrsError):
    """Requested vertex is not part of the linkage."""


class UnlinkedEndpoint(CayrsError):
    """Internal error: traversal hit an interval endpoint with no neighbor."""

"""Exception hierarchy.

Every error carries a short ``name`` matching the vocabulary used in reports
and an ``exit_code`` used by the command line front end.
"""

from __future__ import annotations


class ElliptriError(Exception):
    """Base class for all library errors."""

    exit_code = 3

    @property
    def name(self) -> str:
        return type(self).__name__


# --- validation failures (exit code 2) -------------------------------------

class ValidationError(ElliptriError):
    exit_code = 2


class MalformedToken(ValidationError):
    pass


class NonManifoldEdge(ValidationError):
    pass


class BrokenLink(ValidationError):
    pass


class Disconnected(ValidationError):
    pass


class BoundaryNotSingleCycle(ValidationError):
    pass


class NotOrientable(ValidationError):
    pass


class EulerMismatch(ValidationError):
    pass


# --- domain errors (exit code 3) --------------------------------------------

class DomainError(ElliptriError):
    exit_code = 3


class KindMismatch(DomainError):
    pass


class UnknownVertex(DomainError):
    pass


class NotElliptic(DomainError):
    def __init__(self, message: str, vertices: tuple[int, ...] = ()):
        super().__init__(message)
        self.vertices = vertices


class VertexOnBoundary(DomainError):
    pass


class BoundaryDegreeNotSix(DomainError):
    pass


class NotDegree4Corner(DomainError):
    pass


class ForbiddenChord(DomainError):
    pass


class InsufficientBoundaryPoints(DomainError):
    pass


class FamilyWitnessUnavailable(DomainError):
    pass


class FormulaDomainError(DomainError):
    def __init__(self, formula: str, condition: str):
        super().__init__(f"{formula}: {condition}")
        self.formula = formula
        self.condition = condition


class ParameterDomainError(DomainError):
    pass


class StaleSite(DomainError):
    pass


class BoundaryLengthMismatch(DomainError):
    pass


class PlacementUnsatisfied(DomainError):
    pass


class InvalidTriangleChoice(DomainError):
    pass


class CapExceeded(DomainError):
    pass


class NotATypeTuple(DomainError):
    pass


class UnknownEntry(DomainError):
    pass


class UnsupportedFormat(DomainError):
    pass

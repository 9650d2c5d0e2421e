"""Elliptic triangulations of the sphere and of discs."""

from .core import (
    CanonicalCode,
    ClosedTriangulation,
    Patch,
    PathPatch,
    canonical_code,
    canonical_form,
    is_isomorphic,
    parse_face_list,
    serialize,
    validate,
)

__all__ = [
    "CanonicalCode",
    "ClosedTriangulation",
    "Patch",
    "PathPatch",
    "canonical_code",
    "canonical_form",
    "is_isomorphic",
    "parse_face_list",
    "serialize",
    "validate",
]

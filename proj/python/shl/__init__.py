"""Exact symplectic Hodge theory on Lie-algebra models."""

from ._shl import (
    InconsistencyError,
    ParseError,
    Structure,
    StructureError,
    canonical_text,
    random_structure,
)

__all__ = [
    "InconsistencyError",
    "ParseError",
    "Structure",
    "StructureError",
    "canonical_text",
    "random_structure",
    "load",
]


def load(path):
    """Parse and validate a manifold-spec file."""
    return Structure.load(str(path))

"""Symmetry-aware rotation toolkit.

The in-process API that training pipelines need is re-exported here:
resolve an object's symmetry class, map rotations to canonic form, encode
and decode the flat 6-value representation, and score predictions.
"""

from . import bop, codec, metrics, registry, rotations, validate
from .codec import (
    CanonicEuler,
    SarrValue,
    canonic_matrix,
    clamp_to_canonic,
    sarr_flat,
    sarr_forward,
    sarr_inverse,
    sarr_unflatten,
)
from .metrics import ar_c, evaluate, match_instances, rotation_error
from .registry import INFINITE, SymmetryClass, list_classes, lookup, primitive_class

__version__ = "1.0.0"


def resolve_class(dataset, selector, itodd_alternative=True):
    """Symmetry class for a dataset object id or a primitive name."""
    if str(dataset).lower() == registry.PRIMITIVE:
        return primitive_class(selector)
    return lookup(dataset, selector, itodd_alternative)


def canonic_rotation(matrix, dataset, selector, itodd_alternative=True):
    """Canonic representative of ``matrix`` for one catalogued object."""
    cls = resolve_class(dataset, selector, itodd_alternative)
    return canonic_matrix(matrix, cls)


def encode_rotation(matrix, dataset, selector, itodd_alternative=True):
    """Flat 6-value training target for ``matrix``."""
    cls = resolve_class(dataset, selector, itodd_alternative)
    a, b, g = rotations.matrix_to_euler(rotations.check_rotation_matrix(matrix, 1e-6))
    return sarr_flat(sarr_forward(clamp_to_canonic((float(a), float(b), float(g)), cls)))


def decode_rotation(flat, dataset, selector, itodd_alternative=True):
    """Rotation matrix decoded from a flat 6-value prediction."""
    cls = resolve_class(dataset, selector, itodd_alternative)
    value = sarr_unflatten(flat, cls)
    c = sarr_inverse(value)
    return rotations.euler_to_matrix(c.alpha, c.beta, c.gamma)


__all__ = [
    "CanonicEuler",
    "INFINITE",
    "SarrValue",
    "SymmetryClass",
    "ar_c",
    "bop",
    "canonic_matrix",
    "canonic_rotation",
    "clamp_to_canonic",
    "codec",
    "decode_rotation",
    "encode_rotation",
    "evaluate",
    "list_classes",
    "lookup",
    "match_instances",
    "metrics",
    "primitive_class",
    "registry",
    "resolve_class",
    "rotation_error",
    "rotations",
    "sarr_flat",
    "sarr_forward",
    "sarr_inverse",
    "sarr_unflatten",
    "validate",
]

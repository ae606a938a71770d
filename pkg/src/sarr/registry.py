"""Catalog of object symmetry classes for T-LESS, ITODD, and 3D primitives.

Each class is described by a per-axis symmetry degree vector kappa: degree n
means n visually identical poses per full turn about that axis, INFINITE
means continuous symmetry.  Generator rotations and the clamping style are
derived from kappa.  The tables are embedded data; ``export_catalog`` gives
a diffable JSON view.

ITODD ships with two classifications.  The alternative one (default here)
treats object 23, a screw, as continuously symmetric and objects 2, 4 and 5
as non-symmetric; the original BOP metadata marks all four as symmetric.
The original's screw is kept in the finite high-degree class and 2/4/5 in
the discrete multi-axis class, which is the nearest per-axis description of
symmetries that BOP expresses as off-axis or chained transforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

INFINITE = math.inf

TLESS = "tless"
ITODD = "itodd"
PRIMITIVE = "primitive"
DATASETS = (TLESS, ITODD, PRIMITIVE)

CLAMP_STANDARD = "standard"
CLAMP_CLASS_V = "class_v"

AXES = ("x", "y", "z")


class CatalogError(KeyError):
    """Unknown dataset, object id, class label, or primitive name."""


@dataclass(frozen=True)
class SymmetryClass:
    """One symmetry class: identity, kappa vector, and clamping style."""

    dataset: str
    class_id: str
    kappa: tuple  # (k_alpha, k_beta, k_gamma); ints or INFINITE

    @property
    def clamp_style(self):
        return CLAMP_CLASS_V if self.kappa == (1, 2, 1) else CLAMP_STANDARD

    @property
    def label(self):
        return f"{self.dataset.upper()}-{self.class_id}"

    @property
    def generators(self):
        """Finite generator rotations as (axis, angle_rad) tuples.

        Degree n > 1 about an axis yields angles 2*pi*j/n for j = 1..n-1.
        Continuous axes are listed in ``continuous_axes`` instead.
        """
        gens = []
        for axis, k in zip(AXES, self.kappa):
            if not math.isinf(k) and k > 1:
                gens.extend((axis, 2.0 * math.pi * j / k) for j in range(1, int(k)))
        return tuple(gens)

    @property
    def continuous_axes(self):
        return tuple(a for a, k in zip(AXES, self.kappa) if math.isinf(k))

    @property
    def max_finite_degree(self):
        finite = [k for k in self.kappa if not math.isinf(k)]
        return max(finite) if finite else 1

    def kappa_json(self):
        """kappa with "inf" standing in for continuous axes."""
        return ["inf" if math.isinf(k) else int(k) for k in self.kappa]


def _cls(dataset, class_id, kappa):
    return SymmetryClass(dataset, class_id, kappa)


_TLESS_CLASSES = (
    (_cls(TLESS, "I", (1, 1, 1)), (18, 21, 22)),
    (_cls(TLESS, "II", (1, 1, 2)), (5, 6, 7, 8, 9, 10, 11, 12, 25, 26, 28, 29)),
    (_cls(TLESS, "III", (1, 1, 4)), (27,)),
    (_cls(TLESS, "IV", (1, 1, INFINITE)), (1, 2, 3, 4, 13, 14, 15, 16, 17, 24, 30)),
    (_cls(TLESS, "V", (1, 2, 1)), (19, 20, 23)),
)

# Alternative classification: screw 23 continuous, 2/4/5 non-symmetric.
_ITODD_ALTERNATIVE = (
    (_cls(ITODD, "I", (1, 1, 1)), (1, 2, 4, 5, 6, 10, 13, 15, 16, 20, 21, 22, 26)),
    (_cls(ITODD, "II", (2, 2, 2)), (3, 11, 19)),
    (_cls(ITODD, "III", (1, 1, INFINITE)), (7, 23, 24, 27)),
    (_cls(ITODD, "IV", (1, 1, 5)), (8,)),
    (_cls(ITODD, "V", (1, 2, 1)), (9, 18)),
    (_cls(ITODD, "VI", (1, 1, 18)), (14,)),
    (_cls(ITODD, "VII", (1, 1, 23)), (17,)),
    (_cls(ITODD, "VIII", (1, 1, 12)), (25,)),
    (_cls(ITODD, "IX", (2, 2, INFINITE)), (12, 28)),
)

# Original BOP classification: 23 stays a finite-pitch screw, 2/4/5 symmetric.
_ITODD_ORIGINAL = (
    (_cls(ITODD, "I", (1, 1, 1)), (1, 6, 10, 13, 15, 16, 20, 21, 22, 26)),
    (_cls(ITODD, "II", (2, 2, 2)), (2, 3, 4, 5, 11, 19)),
    (_cls(ITODD, "III", (1, 1, INFINITE)), (7, 24, 27)),
    (_cls(ITODD, "IV", (1, 1, 5)), (8,)),
    (_cls(ITODD, "V", (1, 2, 1)), (9, 18)),
    (_cls(ITODD, "VI", (1, 1, 18)), (14,)),
    (_cls(ITODD, "VII", (1, 1, 23)), (17, 23)),
    (_cls(ITODD, "VIII", (1, 1, 12)), (25,)),
    (_cls(ITODD, "IX", (2, 2, INFINITE)), (12, 28)),
)

_PRIMITIVES = (
    (_cls(PRIMITIVE, "CUBOID", (2, 2, 2)), ()),
    (_cls(PRIMITIVE, "CUB_XY", (2, 2, 4)), ()),
    (_cls(PRIMITIVE, "CUB_XZ", (2, 4, 2)), ()),
    (_cls(PRIMITIVE, "CUB_YZ", (4, 2, 2)), ()),
    (_cls(PRIMITIVE, "CUBE", (4, 4, 4)), ()),
    (_cls(PRIMITIVE, "CYLINDER", (2, 2, INFINITE)), ()),
    (_cls(PRIMITIVE, "TORUS", (2, 2, INFINITE)), ()),
    (_cls(PRIMITIVE, "SPHERE", (INFINITE, INFINITE, INFINITE)), ()),
)

OBJECT_RANGES = {TLESS: range(1, 31), ITODD: range(1, 29)}


def _normalize_dataset(dataset):
    name = str(dataset).lower()
    if name not in DATASETS:
        raise CatalogError(f"unknown dataset {dataset!r}; expected one of {DATASETS}")
    return name


def list_classes(dataset, itodd_alternative=True):
    """All classes of a dataset as (SymmetryClass, member_object_ids) pairs."""
    name = _normalize_dataset(dataset)
    if name == TLESS:
        return list(_TLESS_CLASSES)
    if name == ITODD:
        return list(_ITODD_ALTERNATIVE if itodd_alternative else _ITODD_ORIGINAL)
    return list(_PRIMITIVES)


@lru_cache(maxsize=None)
def _id_index(dataset, itodd_alternative):
    index = {}
    for cls, members in list_classes(dataset, itodd_alternative):
        for obj_id in members:
            index[obj_id] = cls
    return index


def lookup(dataset, object_id, itodd_alternative=True):
    """Symmetry class of one dataset object."""
    name = _normalize_dataset(dataset)
    if name == PRIMITIVE:
        return primitive_class(object_id)
    index = _id_index(name, bool(itodd_alternative))
    try:
        return index[int(object_id)]
    except (KeyError, TypeError, ValueError):
        raise CatalogError(
            f"object id {object_id!r} is not in the {name} catalog "
            f"(valid: {OBJECT_RANGES[name].start}..{OBJECT_RANGES[name].stop - 1})"
        ) from None


def primitive_class(name):
    """Symmetry class of a geometric primitive by name (e.g. CUBE)."""
    wanted = str(name).upper()
    for cls, _ in _PRIMITIVES:
        if cls.class_id == wanted:
            return cls
    raise CatalogError(f"unknown primitive {name!r}; expected one of "
                       f"{[c.class_id for c, _ in _PRIMITIVES]}")


def class_by_label(dataset, class_id, itodd_alternative=True):
    """Class selected by its label within a dataset (e.g. "II", "CUBE")."""
    wanted = str(class_id).upper()
    for cls, _ in list_classes(dataset, itodd_alternative):
        if cls.class_id.upper() == wanted:
            return cls
    raise CatalogError(f"unknown class {class_id!r} for dataset {dataset!r}")


def members(cls, itodd_alternative=True):
    """Object ids belonging to a class; empty for primitives."""
    for candidate, ids in list_classes(cls.dataset, itodd_alternative):
        if candidate.class_id == cls.class_id:
            return ids
    return ()


def export_catalog(itodd_alternative=True):
    """Catalog as JSON-ready rows for auditing against external tables."""
    rows = []
    for dataset in (TLESS, ITODD):
        for cls, member_ids in list_classes(dataset, itodd_alternative):
            for obj_id in member_ids:
                rows.append({
                    "dataset": dataset,
                    "object_id": obj_id,
                    "class_id": cls.class_id,
                    "kappa": cls.kappa_json(),
                    "clamp_style": cls.clamp_style,
                })
    for cls, _ in _PRIMITIVES:
        rows.append({
            "dataset": PRIMITIVE,
            "object_id": cls.class_id,
            "class_id": cls.class_id,
            "kappa": cls.kappa_json(),
            "clamp_style": cls.clamp_style,
        })
    rows.sort(key=lambda r: (r["dataset"], str(r["object_id"]).zfill(4)))
    return rows

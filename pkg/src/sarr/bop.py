"""Reading and writing BOP-format annotation and result files.

scene_gt JSON maps image-id strings to arrays of instances, each carrying a
row-major 3x3 rotation (cam_R_m2c), a translation in millimeters
(cam_t_m2c) and an object id.  scene_gt_info JSON carries per-instance
visibility fractions.  Results are the CSV rows
``scene_id,im_id,obj_id,score,R,t,time`` with R and t space-separated
inside their fields.  Floats are serialized with shortest round-trip
precision so converted files are diff-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

import numpy as np

from . import registry
from .codec import canonic_matrix
from .rotations import is_rotation_matrix

RESULTS_HEADER = "scene_id,im_id,obj_id,score,R,t,time"


class BopFormatError(ValueError):
    """Malformed annotation or result file; message carries the location."""


@dataclass(frozen=True)
class PoseRecord:
    """One annotated or predicted object instance."""

    scene_id: int
    image_id: int
    object_id: int
    rotation: np.ndarray          # 3x3, row-major semantics
    translation: np.ndarray       # millimeters
    score: float = None
    visib_fract: float = None
    time_s: float = None

    def __post_init__(self):
        object.__setattr__(self, "rotation",
                           np.asarray(self.rotation, dtype=float).reshape(3, 3))
        object.__setattr__(self, "translation",
                           np.asarray(self.translation, dtype=float).reshape(3))
        if self.visib_fract is not None and not 0.0 <= self.visib_fract <= 1.0:
            raise BopFormatError(
                f"visib_fract {self.visib_fract} outside [0, 1]")


def _fmt(x):
    return repr(float(x))


def read_scene_gt(path, scene_id=0):
    """Parse a scene_gt JSON file into PoseRecords (order preserved)."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise BopFormatError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise BopFormatError(f"{path}: expected an object keyed by image id")

    records = []
    for image_key in sorted(data, key=_image_order):
        try:
            image_id = int(image_key)
        except ValueError:
            raise BopFormatError(f"{path}: image key {image_key!r} is not an integer")
        entries = data[image_key]
        if not isinstance(entries, list):
            raise BopFormatError(f"{path}: image {image_key!r}: expected an array")
        for entry in entries:
            rot = entry.get("cam_R_m2c")
            tra = entry.get("cam_t_m2c")
            if not isinstance(rot, list) or len(rot) != 9:
                raise BopFormatError(
                    f"{path}: image {image_key!r}: cam_R_m2c must have 9 entries")
            if not isinstance(tra, list) or len(tra) != 3:
                raise BopFormatError(
                    f"{path}: image {image_key!r}: cam_t_m2c must have 3 entries")
            m = np.asarray(rot, dtype=float).reshape(3, 3)
            if not is_rotation_matrix(m, tol=1e-6):
                raise BopFormatError(
                    f"{path}: image {image_key!r}: cam_R_m2c is not orthonormal")
            records.append(PoseRecord(
                scene_id=scene_id,
                image_id=image_id,
                object_id=int(entry["obj_id"]),
                rotation=m,
                translation=tra,
            ))
    return records


def _image_order(key):
    try:
        return (0, int(key))
    except ValueError:
        return (1, key)


def write_scene_gt(records, path):
    """Write PoseRecords as scene_gt JSON, image keys in numeric order."""
    by_image = {}
    for rec in records:
        by_image.setdefault(rec.image_id, []).append(rec)
    lines = ["{"]
    for pos, image_id in enumerate(sorted(by_image)):
        entries = []
        for rec in by_image[image_id]:
            r = ", ".join(_fmt(x) for x in rec.rotation.reshape(9))
            t = ", ".join(_fmt(x) for x in rec.translation)
            entries.append(
                '  {"cam_R_m2c": [%s], "cam_t_m2c": [%s], "obj_id": %d}'
                % (r, t, rec.object_id))
        sep = "," if pos + 1 < len(by_image) else ""
        lines.append(' "%d": [\n%s\n ]%s' % (image_id, ",\n".join(entries), sep))
    lines.append("}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def read_scene_gt_info(path):
    """Visibility map: (image_id, instance_index) -> visib_fract or None."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise BopFormatError(f"{path}: invalid JSON: {exc}") from exc
    info = {}
    for image_key, entries in data.items():
        image_id = int(image_key)
        for idx, entry in enumerate(entries):
            frac = entry.get("visib_fract")
            if frac is not None and not 0.0 <= frac <= 1.0:
                raise BopFormatError(
                    f"{path}: image {image_key!r} instance {idx}: "
                    f"visib_fract {frac} outside [0, 1]")
            info[(image_id, idx)] = frac
    return info


def merge_visibility(records, info):
    """Attach visib_fract to records, positionally per image."""
    index_within_image = {}
    merged = []
    for rec in records:
        idx = index_within_image.get(rec.image_id, 0)
        index_within_image[rec.image_id] = idx + 1
        merged.append(replace(rec, visib_fract=info.get((rec.image_id, idx))))
    return merged


def read_results_csv(path, scene_id=None):
    """Parse a BOP results CSV into PoseRecords.

    An optional header line is skipped.  Errors carry 1-based line numbers.
    When scene_id is given, only rows of that scene are returned.
    """
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if lineno == 1 and line.lower().startswith("scene_id"):
                continue
            fields = line.split(",")
            if len(fields) != 7:
                raise BopFormatError(
                    f"{path}:{lineno}: expected 7 comma-separated fields, "
                    f"got {len(fields)}")
            try:
                rot = [float(x) for x in fields[4].split()]
                tra = [float(x) for x in fields[5].split()]
                if len(rot) != 9:
                    raise BopFormatError(
                        f"{path}:{lineno}: R must have 9 entries, got {len(rot)}")
                if len(tra) != 3:
                    raise BopFormatError(
                        f"{path}:{lineno}: t must have 3 entries, got {len(tra)}")
                rec = PoseRecord(
                    scene_id=int(fields[0]),
                    image_id=int(fields[1]),
                    object_id=int(fields[2]),
                    rotation=np.asarray(rot).reshape(3, 3),
                    translation=tra,
                    score=float(fields[3]),
                    time_s=float(fields[6]),
                )
            except BopFormatError:
                raise
            except ValueError as exc:
                raise BopFormatError(f"{path}:{lineno}: {exc}") from exc
            if scene_id is None or rec.scene_id == scene_id:
                records.append(rec)
    return records


def write_results_csv(records, path):
    """Write PoseRecords in the results CSV layout, full float precision."""
    lines = [RESULTS_HEADER]
    for rec in records:
        r = " ".join(_fmt(x) for x in rec.rotation.reshape(9))
        t = " ".join(_fmt(x) for x in rec.translation)
        score = _fmt(rec.score if rec.score is not None else 1.0)
        time_s = _fmt(rec.time_s if rec.time_s is not None else -1.0)
        lines.append(",".join([
            str(rec.scene_id), str(rec.image_id), str(rec.object_id),
            score, r, t, time_s,
        ]))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def convert_to_canonic(records, dataset, itodd_alternative=True):
    """Replace every rotation with its canonic representative.

    Translations, ids and metadata are untouched.  Raises CatalogError for
    object ids absent from the dataset catalog.
    """
    converted = []
    for rec in records:
        cls = registry.lookup(dataset, rec.object_id, itodd_alternative)
        canonic = canonic_matrix(rec.rotation, cls)
        # keep the original bits when the rotation is already canonic, so
        # repeated conversion is a byte-exact fixed point
        if np.max(np.abs(canonic - rec.rotation)) < 1e-9:
            converted.append(rec)
        else:
            converted.append(replace(rec, rotation=canonic))
    return converted

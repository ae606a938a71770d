"""Symmetry-sensitive evaluation of orientation estimates.

The rotational error is the angle of the relative rotation between a
prediction and the canonic ground truth (cosine distance, degrees, 0..180).
Scores are average recalls of this error over fixed thresholds.  Ground
truth is canonicalized before scoring; predictions are scored as given, so
a method that answers with a visually correct but non-canonic pose is
penalized.  That is the point of the metric.

Evaluation runs in two modes: the single most visible instance per object
per image ("siso"), or all annotated instances ("vivo") with predictions
assigned to ground truths by minimum-weight bipartite matching.  A missing
prediction counts as the maximum error of 180 degrees.
"""

from __future__ import annotations

import json
import os
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import registry
from .codec import canonic_matrix

THRESHOLDS_DEG = (2.0, 5.0, 10.0, 15.0, 25.0, 40.0)
MISSING_ERROR_DEG = 180.0

SISO = "siso"
VIVO = "vivo"


class MissingVisibilityError(ValueError):
    """Siso evaluation requires a visibility fraction on every gt record."""


def rotation_error(pred, gt):
    """Angle in degrees between two rotation matrices, in [0, 180].

    Computed as arccos((trace(pred @ gt^T) - 1) / 2) with the argument
    clamped to [-1, 1].  Broadcasts over leading dimensions.
    """
    pred = np.asarray(pred, dtype=float)
    gt = np.asarray(gt, dtype=float)
    tr = np.einsum("...ij,...ij->...", pred, gt)
    cos_angle = np.clip((tr - 1.0) / 2.0, -1.0, 1.0)
    return np.degrees(np.arccos(cos_angle))


def recall_curve(errors, thresholds=THRESHOLDS_DEG):
    """Fraction of errors at or below each threshold."""
    errors = np.asarray(list(errors), dtype=float)
    if errors.size == 0:
        raise ValueError("cannot compute recalls of an empty error list")
    return {float(t): float(np.mean(errors <= t)) for t in thresholds}


def ar_c(errors, thresholds=THRESHOLDS_DEG):
    """Average recall over the error thresholds."""
    curve = recall_curve(errors, thresholds)
    return float(np.mean(list(curve.values())))


def solve_assignment(cost):
    """Minimum-cost assignment on a square matrix (Kuhn-Munkres, O(n^3)).

    Returns col_of_row: the column assigned to each row.
    """
    cost = np.asarray(cost, dtype=float)
    n = cost.shape[0]
    if cost.shape != (n, n):
        raise ValueError("cost matrix must be square")
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    match = np.zeros(n + 1, dtype=int)  # match[j] = row assigned to column j
    way = np.zeros(n + 1, dtype=int)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = np.full(n + 1, np.inf)
        used = np.zeros(n + 1, dtype=bool)
        while True:
            used[j0] = True
            i0, delta, j1 = match[j0], np.inf, 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1, j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            u[match[used]] += delta
            v[used] -= delta
            minv[~used] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            match[j0] = match[way[j0]]
            j0 = way[j0]
    col_of_row = np.zeros(n, dtype=int)
    for j in range(1, n + 1):
        col_of_row[match[j] - 1] = j - 1
    return col_of_row


def _lexicographic_ties(cost, col_of_row):
    """Swap cost-neutral pairs until the assignment is pairwise lexicographic."""
    n = len(col_of_row)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                ci, cj = col_of_row[i], col_of_row[j]
                if cj < ci and abs((cost[i, cj] + cost[j, ci])
                                   - (cost[i, ci] + cost[j, cj])) < 1e-12:
                    col_of_row[i], col_of_row[j] = cj, ci
                    changed = True
    return col_of_row


@dataclass
class MatchResult:
    pairs: list          # (gt_index, pred_index) for real matches
    errors: list         # per ground truth, 180 when unmatched
    missing: int         # ground truths without a real prediction


def match_instances(gt, pred):
    """Optimal one-to-one matching of predictions to ground truths.

    The rectangular problem is padded square with virtual entries at the
    missing-prediction cost of 180, so surplus predictions are dropped and
    unmatched ground truths score 180.
    """
    n_gt, n_pred = len(gt), len(pred)
    n = max(n_gt, n_pred)
    if n == 0:
        return MatchResult([], [], 0)
    cost = np.full((n, n), MISSING_ERROR_DEG)
    if n_gt and n_pred:
        gt_arr = np.stack([np.asarray(g, dtype=float) for g in gt])
        pred_arr = np.stack([np.asarray(p, dtype=float) for p in pred])
        cost[:n_gt, :n_pred] = rotation_error(pred_arr[None, :], gt_arr[:, None])
    col_of_row = _lexicographic_ties(cost, solve_assignment(cost))

    pairs, errors, missing = [], [], 0
    for i in range(n_gt):
        j = int(col_of_row[i])
        if j < n_pred:
            pairs.append((i, j))
            errors.append(float(cost[i, j]))
        else:
            missing += 1
            errors.append(MISSING_ERROR_DEG)
    return MatchResult(pairs, errors, missing)


@dataclass
class EvalReport:
    task: str
    thresholds_deg: tuple
    recalls: dict
    ar_c: float
    per_object: dict
    missing: int
    warnings: int
    assignments: dict = field(default_factory=dict)
    averaging: str = "micro"

    def to_json(self, indent=2):
        payload = {
            "task": self.task,
            "averaging": self.averaging,
            "thresholds_deg": list(self.thresholds_deg),
            "recalls": {f"{t:g}": r for t, r in sorted(self.recalls.items())},
            "ar_c": self.ar_c,
            "per_object": {str(k): v for k, v in sorted(self.per_object.items())},
            "missing": self.missing,
            "warnings": self.warnings,
        }
        return json.dumps(payload, indent=indent, sort_keys=False)


def worker_count():
    """Internal parallelism cap, from the SARR_THREADS environment variable."""
    raw = os.environ.get("SARR_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _group(records):
    groups = defaultdict(list)
    for rec in records:
        groups[(rec.scene_id, rec.image_id, rec.object_id)].append(rec)
    return groups


def evaluate(gt_records, pred_records, task, dataset, itodd_alternative=True,
             thresholds=THRESHOLDS_DEG):
    """Score predictions against ground truth annotations.

    Ground-truth rotations are canonicalized per object symmetry class;
    predictions are compared as given.  Predictions whose
    (scene, image, object) key has no annotation are counted as warnings
    and skipped.
    """
    if task not in (SISO, VIVO):
        raise ValueError(f"unknown task {task!r}; expected {SISO!r} or {VIVO!r}")
    gt_groups = _group(gt_records)
    pred_groups = _group(pred_records)
    warnings = sum(len(v) for k, v in pred_groups.items() if k not in gt_groups)

    def score_group(key):
        gts = gt_groups[key]
        preds = pred_groups.get(key, [])
        cls = registry.lookup(dataset, key[2], itodd_alternative)
        gt_canon = [canonic_matrix(g.rotation, cls) for g in gts]
        if task == SISO:
            vis = [g.visib_fract for g in gts]
            if any(v is None for v in vis):
                raise MissingVisibilityError(
                    f"siso needs visib_fract for scene {key[0]} image {key[1]} "
                    f"object {key[2]}; merge the gt-info file first")
            best = int(np.argmax(vis))
            if preds:
                errs = [float(rotation_error(p.rotation, gt_canon[best]))
                        for p in preds]
                return key, [min(errs)], [], 0
            return key, [MISSING_ERROR_DEG], [], 1
        result = match_instances(gt_canon, [p.rotation for p in preds])
        return key, result.errors, result.pairs, result.missing

    keys = sorted(gt_groups)
    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            scored = list(pool.map(score_group, keys))
    else:
        scored = [score_group(k) for k in keys]

    all_errors, per_object_errors, assignments, missing = [], defaultdict(list), {}, 0
    for key, errors, pairs, miss in scored:
        all_errors.extend(errors)
        per_object_errors[key[2]].extend(errors)
        if pairs:
            assignments[f"{key[0]}/{key[1]}/{key[2]}"] = pairs
        missing += miss

    if not all_errors:
        raise ValueError("no ground-truth instances to evaluate")
    per_object = {
        obj: {"ar_c": ar_c(errs, thresholds), "n": len(errs)}
        for obj, errs in per_object_errors.items()
    }
    return EvalReport(
        task=task,
        thresholds_deg=tuple(thresholds),
        recalls=recall_curve(all_errors, thresholds),
        ar_c=ar_c(all_errors, thresholds),
        per_object=per_object,
        missing=missing,
        warnings=warnings,
        assignments=assignments,
    )

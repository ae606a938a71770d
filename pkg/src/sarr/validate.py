"""Numerical certification of the encoding's uniqueness and continuity.

The uniqueness scan checks that composing a pose with any catalogued
symmetry generator leaves the encoded value unchanged after clamping.
Generators act about the axis they belong to in the intrinsic-XYZ chain:
an x generator pre-multiplies the pose matrix, a z generator post-
multiplies it, and a y generator is inserted between the x and y factors;
flip classes (kappa = [1, 2, 1]) instead post-multiply their y half-turn,
which is the body-frame flip their clamping branch resolves.  Compositions
are carried out as matrix products and re-decomposed, never as bare angle
arithmetic.

The continuity scan walks each axis of the canonic space in fixed steps,
the other angles at zero, and bounds the elementwise change of the encoding
between neighbours, including the wrap from the end of the clamped interval
back to zero.  The bound is max_finite_degree * step (in radians).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .codec import SINGULARITY_TOL, _nu_applies, clamp_angles, forward_values
from .registry import CLAMP_CLASS_V, TLESS
from .rotations import euler_to_matrix, matrix_to_euler, rot_x, rot_y, rot_z

UNIQUENESS_TOL = 1e-9
CONTINUITY_SLACK = 1e-9
# Sample angles standing in for a continuous generator family.
CONTINUOUS_GENERATOR_DEG = (37.0, 90.0, 245.0)

VALUE_SELECTORS = {
    "s_alpha": (0, 0), "c_alpha": (1, 0),
    "s_beta": (0, 1), "c_beta": (1, 1),
    "s_gamma": (0, 2), "c_gamma": (1, 2),
}

T1_ALPHA_DEG = tuple(range(5, 86, 10))
T2_ALPHA_DEG = tuple(range(275, 356, 10))
T_GAMMA_DEG = tuple(range(0, 360, 5))


@dataclass(frozen=True)
class SpaceSpec:
    """Angle sets (degrees) of one part of the training view sphere."""

    alpha_deg: tuple
    beta_deg: tuple
    gamma_deg: tuple
    part: str  # "T1" | "T2" | "UNION"

    def euler_radians(self):
        """All (alpha, beta, gamma) triples of the grid, alpha-major."""
        a, b, g = np.meshgrid(np.deg2rad(self.alpha_deg),
                              np.deg2rad(self.beta_deg),
                              np.deg2rad(self.gamma_deg), indexing="ij")
        return np.stack([a.ravel(), b.ravel(), g.ravel()], axis=-1)


def space_spec(part="UNION"):
    parts = {
        "T1": T1_ALPHA_DEG,
        "T2": T2_ALPHA_DEG,
        "UNION": T1_ALPHA_DEG + T2_ALPHA_DEG,
    }
    if part not in parts:
        raise ValueError(f"unknown space part {part!r}")
    return SpaceSpec(parts[part], (0,), T_GAMMA_DEG, part)


def sample_space_T(cls):
    """Training-space poses for a class: 1296 triples, or the 648 of the
    lower hemisphere for flip classes, whose upper half mirrors it."""
    part = "T1" if cls.clamp_style == CLAMP_CLASS_V else "UNION"
    return space_spec(part).euler_radians()


@dataclass
class ScanReport:
    dataset: str
    class_id: str
    step_deg: float
    max_uniqueness_deviation: float = 0.0
    max_adjacent_delta: float = 0.0
    lipschitz_bound: float = 0.0
    boundary_cases: list = field(default_factory=list)

    @property
    def passed(self):
        return (self.max_uniqueness_deviation < UNIQUENESS_TOL
                and self.max_adjacent_delta
                <= self.lipschitz_bound + CONTINUITY_SLACK)

    def merged(self, other):
        return ScanReport(
            dataset=self.dataset,
            class_id=self.class_id,
            step_deg=self.step_deg,
            max_uniqueness_deviation=max(self.max_uniqueness_deviation,
                                         other.max_uniqueness_deviation),
            max_adjacent_delta=max(self.max_adjacent_delta,
                                   other.max_adjacent_delta),
            lipschitz_bound=max(self.lipschitz_bound, other.lipschitz_bound),
            boundary_cases=self.boundary_cases + other.boundary_cases,
        )

    def to_json(self, indent=2):
        return json.dumps({
            "dataset": self.dataset,
            "class": self.class_id,
            "step_deg": self.step_deg,
            "max_uniqueness_deviation": self.max_uniqueness_deviation,
            "max_adjacent_delta": self.max_adjacent_delta,
            "lipschitz_bound": self.lipschitz_bound,
            "boundary_cases": self.boundary_cases,
            "pass": self.passed,
        }, indent=indent)


def _axis_values_deg(k, step_deg):
    """Grid over one axis of the canonic space [0, 360/k)."""
    if math.isinf(k):
        return np.array([0.0])
    interval = 360.0 / k
    count = max(1, int(math.ceil(interval / step_deg - 1e-9)))
    vals = np.arange(count) * step_deg
    return vals[vals < interval - 1e-9] if count > 1 else vals


def _scan_grid(cls, step_deg):
    """Certification grid of a class, as (N, 3) radians."""
    if cls.clamp_style == CLAMP_CLASS_V or cls.dataset == TLESS:
        alphas = np.arange(5.0, 85.0 + 1e-9, step_deg)
        if cls.clamp_style != CLAMP_CLASS_V:
            alphas = np.concatenate([alphas, np.arange(275.0, 355.0 + 1e-9, step_deg)])
        betas = np.array([0.0])
        gammas = np.arange(0.0, 360.0, step_deg)
    else:
        ka, kb, kg = cls.kappa
        alphas = _axis_values_deg(ka, step_deg)
        betas = _axis_values_deg(kb, step_deg)
        gammas = _axis_values_deg(kg, step_deg)
    a, b, g = np.meshgrid(np.deg2rad(alphas), np.deg2rad(betas),
                          np.deg2rad(gammas), indexing="ij")
    euler = np.stack([a.ravel(), b.ravel(), g.ravel()], axis=-1)
    # Exclude the Euler chart singularity (pitch at +-90 deg): roll and yaw
    # are indistinguishable there, so per-axis clamping cannot resolve a yaw
    # generator.  Measure zero in SO(3); the view-sphere grids never hit it.
    return euler[np.abs(np.cos(euler[:, 1])) > 1e-6]


def _scan_generators(cls):
    """(axis, angle) pairs to certify, sampling continuous families."""
    gens = list(cls.generators)
    for axis in cls.continuous_axes:
        gens.extend((axis, math.radians(d)) for d in CONTINUOUS_GENERATOR_DEG)
    return gens


def _pipeline_values(matrices, cls):
    """Encoded values plus a mask of poses in the representation's regular
    regime: away from the Euler chart singularity (pitch +-90 deg) and away
    from vanishing nu products (the documented 90-degree singularity of
    multi-axis classes)."""
    a, b, g = matrix_to_euler(matrices)
    regular = np.abs(np.cos(b)) > 1e-6
    a_c, b_c, g_c = clamp_angles(a, b, g, cls)
    ka, kb, _ = cls.kappa
    if _nu_applies(ka):
        nu = np.abs(np.cos(a_c))
        regular &= nu > SINGULARITY_TOL
        if _nu_applies(kb):
            regular &= nu * np.abs(np.cos(b_c)) > SINGULARITY_TOL
    return forward_values(a_c, b_c, g_c, cls), regular


def _composed(euler, axis, angle, cls):
    """Matrix of each grid pose composed with one generator."""
    a, b, g = euler[:, 0], euler[:, 1], euler[:, 2]
    if axis == "x":
        return rot_x(angle)[None] @ euler_to_matrix(a, b, g)
    if axis == "z":
        return euler_to_matrix(a, b, g) @ rot_z(angle)[None]
    if cls.clamp_style == CLAMP_CLASS_V:
        return euler_to_matrix(a, b, g) @ rot_y(angle)[None]
    return rot_x(a) @ (rot_y(angle)[None] @ rot_y(b)) @ rot_z(g)


def uniqueness_scan(cls, step_deg=5.0):
    """Max elementwise encoding deviation over all generator compositions.

    Pose pairs touching a singular regime on either side are skipped: the
    Euler chart singularity at pitch +-90 degrees, and vanishing nu
    products for multi-axis classes.  Both sets have measure zero and both
    are documented limitations of the representation rather than scan
    artifacts; the view-sphere grids never meet them.
    """
    report = ScanReport(cls.dataset, cls.class_id, float(step_deg))
    generators = _scan_generators(cls)
    if not generators:
        return report  # no symmetries: vacuous pass
    euler = _scan_grid(cls, step_deg)
    base, base_ok = _pipeline_values(
        euler_to_matrix(euler[:, 0], euler[:, 1], euler[:, 2]), cls)
    worst = 0.0
    for axis, angle in generators:
        composed, comp_ok = _pipeline_values(_composed(euler, axis, angle, cls),
                                             cls)
        keep = base_ok & comp_ok
        if np.any(keep):
            dev = np.max(np.abs(base[keep] - composed[keep]))
            worst = max(worst, float(dev))
    report.max_uniqueness_deviation = worst
    return report


def continuity_scan(cls, step_deg=1.0):
    """Max elementwise encoding delta between neighbours along each axis.

    Each axis of the canonic space is walked with the other two angles at
    zero; the pair across the symmetry boundary (last sample back to zero)
    is included and reported in ``boundary_cases``.
    """
    report = ScanReport(cls.dataset, cls.class_id, float(step_deg))
    report.lipschitz_bound = cls.max_finite_degree * math.radians(step_deg)
    worst = 0.0
    for axis_idx, (axis, k) in enumerate(zip("xyz", cls.kappa)):
        vals_deg = _axis_values_deg(k, step_deg)
        if len(vals_deg) < 2:
            continue
        angles = [np.zeros(len(vals_deg)) for _ in range(3)]
        angles[axis_idx] = np.deg2rad(vals_deg)
        sarr = forward_values(angles[0], angles[1], angles[2], cls)
        inner = float(np.max(np.abs(np.diff(sarr, axis=0))))
        wrap = float(np.max(np.abs(sarr[-1] - sarr[0])))
        worst = max(worst, inner, wrap)
        report.boundary_cases.append({
            "axis": axis,
            "from_deg": float(vals_deg[-1]),
            "to_deg": 0.0,
            "delta": wrap,
        })
    report.max_adjacent_delta = worst
    return report


def emit_grid(cls, value_selector, step_deg=5.0):
    """Heatmap rows (alpha_deg, gamma_deg, value) over the view-sphere grid.

    beta is zero throughout; rows are alpha-major.  The value is one entry
    of the encoded representation after clamping, so visually identical
    poses produce rows of equal value.
    """
    if value_selector not in VALUE_SELECTORS:
        raise ValueError(f"unknown selector {value_selector!r}; expected one of "
                         f"{sorted(VALUE_SELECTORS)}")
    row, col = VALUE_SELECTORS[value_selector]
    alphas = np.arange(5.0, 85.0 + 1e-9, step_deg)
    if cls.clamp_style != CLAMP_CLASS_V:
        alphas = np.concatenate([alphas, np.arange(275.0, 355.0 + 1e-9, step_deg)])
    gammas = np.arange(0.0, 360.0, step_deg)
    rows = []
    for a_deg in alphas:
        a_c, b_c, g_c = clamp_angles(np.deg2rad(a_deg), 0.0, np.deg2rad(gammas), cls)
        vals = forward_values(a_c, b_c, g_c, cls)[..., row, col]
        rows.extend((float(a_deg), float(gd), float(v))
                    for gd, v in zip(gammas, vals))
    return rows


def write_grid_csv(rows, path):
    """Write grid rows with fixed 9-decimal formatting (byte-stable)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("alpha_deg,gamma_deg,value\n")
        for a, g, v in rows:
            fh.write(f"{a:.9f},{g:.9f},{v:.9f}\n")

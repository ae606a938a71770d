"""Symmetry-aware rotation encoding: clamping, forward map, inverse map.

The encoding is a 2x3 matrix of (sin, cos) pairs, one column per Euler
angle, with the angle frequencies scaled by the per-axis symmetry degrees.
A degree-n axis uses sin(n*theta), cos(n*theta) so all n visually identical
poses share one value and the value stays continuous across the symmetry
boundary.  Continuously symmetric axes carry the constant column (0, 1).
For objects symmetric about more than one axis, the sin entries of later
columns are multiplied by nu terms (cosines of earlier clamped angles) so
visually distinct poses keep distinct encodings; the nu terms vanish at
90 degrees, which the inverse reports through a ``degenerate`` flag.

Pipeline for canonicalizing a rotation matrix:

    matrix -> Euler -> clamp_to_canonic -> sarr_forward
           -> sarr_inverse -> Euler -> matrix

Clamping reduces each angle modulo its symmetry step (continuous axes are
pinned to zero).  Two extra rules make the pipeline a well-defined function
of the input matrix rather than of one Euler reading of it:

* classes with a y-flip symmetry (kappa = [1, 2, 1]) use a dedicated branch:
  when alpha exceeds pi the pose is replaced by its flip twin
  (alpha - pi, -beta, pi - gamma), which is the same appearance;
* for other classes with finite pitch symmetry, the clamped pitch is folded
  into the XYZ decomposition's principal range using the identity
  M(a, b, g) = M(a + pi, pi - b, g + pi).  The companion half-turns on roll
  and yaw are absorbed by their own clamps (every catalogued class with
  pitch symmetry has even or continuous roll/yaw degrees), so the fold maps
  a pose to a visually identical one.  Without it, re-decomposing the
  canonic matrix would land on the other Euler branch and re-canonicalize
  to a different representative.

All kernels broadcast over leading batch dimensions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import rotations
from .registry import CLAMP_CLASS_V, SymmetryClass

TWO_PI = 2.0 * math.pi
SINGULARITY_TOL = 1e-6
COLUMN_NORM_TOL = 1e-6
# Flat layout of the 2x3 value, fixed for files and training targets.
FLAT_ORDER = ("s_alpha", "c_alpha", "s_beta", "c_beta", "s_gamma", "c_gamma")


class DegenerateValueError(ValueError):
    """A (sin, cos) column is too short to normalize."""


@dataclass(frozen=True)
class CanonicEuler:
    """Euler triple restricted to a class's canonic intervals (radians).

    ``degenerate`` is set by the inverse map when a sign had to be taken on
    the principal branch because the accumulated nu product vanished.
    """

    alpha: float
    beta: float
    gamma: float
    sym_class: SymmetryClass
    degenerate: bool = False

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class SarrValue:
    """The 2x3 encoding; row 0 holds sines, row 1 cosines."""

    values: np.ndarray
    sym_class: SymmetryClass

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if self.values.shape != (2, 3):
            raise ValueError(f"encoding must be 2x3, got {self.values.shape}")


def _lambdas(cls):
    return tuple(0.0 if math.isinf(k) else float(k) for k in cls.kappa)


def _nu_applies(k):
    return 1 < k and not math.isinf(k)


def _pitch_fold_applies(cls):
    # The fold shifts roll and yaw by pi; legal only when their clamps
    # absorb a half turn (even finite degree, or a continuous axis).
    ka, kb, kg = cls.kappa
    if math.isinf(kb) or kb <= 1:
        return False
    absorbs = lambda k: math.isinf(k) or (k > 1 and int(k) % 2 == 0)
    return absorbs(ka) and absorbs(kg)


def _wrap(theta, period):
    # np.mod may return the period itself for tiny negative inputs; keep
    # the result inside the half-open interval [0, period).
    r = np.mod(theta, period)
    return np.where(r >= period, r - period, r)


def _axis_mod(theta, k):
    if math.isinf(k):
        return np.zeros_like(np.asarray(theta, dtype=float))
    return _wrap(theta, TWO_PI / k)


def clamp_angles(alpha, beta, gamma, cls):
    """Clamp raw Euler angles to the class's canonic intervals (arrays ok)."""
    alpha, beta, gamma = np.broadcast_arrays(
        np.asarray(alpha, dtype=float), np.asarray(beta, dtype=float),
        np.asarray(gamma, dtype=float))

    if cls.clamp_style == CLAMP_CLASS_V:
        a = _wrap(alpha, TWO_PI)
        flip = a > np.pi
        a_c = np.where(flip, _wrap(alpha - np.pi, TWO_PI), a)
        b_c = np.where(flip, -_wrap(beta, TWO_PI), _wrap(beta, TWO_PI))
        g_c = np.where(flip, _wrap(np.pi - gamma, TWO_PI), _wrap(gamma, TWO_PI))
        return a_c, b_c, g_c

    ka, kb, kg = cls.kappa
    a_c = _axis_mod(alpha, ka)
    b_c = _axis_mod(beta, kb)
    g_c = _axis_mod(gamma, kg)

    if _pitch_fold_applies(cls):
        b_alt = _axis_mod(np.pi - b_c, kb)
        fold = b_alt < b_c
        a_c = np.where(fold, _axis_mod(a_c + np.pi, ka), a_c)
        b_c = np.where(fold, b_alt, b_c)
        g_c = np.where(fold, _axis_mod(g_c + np.pi, kg), g_c)
    return a_c, b_c, g_c


def forward_values(alpha, beta, gamma, cls):
    """Encoding of clamped angles; returns shape (..., 2, 3)."""
    alpha, beta, gamma = np.broadcast_arrays(
        np.asarray(alpha, dtype=float), np.asarray(beta, dtype=float),
        np.asarray(gamma, dtype=float))
    ka, kb, kg = cls.kappa
    la, lb, lg = _lambdas(cls)

    nu_a = np.cos(alpha) if _nu_applies(ka) else np.ones_like(alpha)
    nu_b = np.cos(beta) if _nu_applies(kb) else np.ones_like(beta)

    s = np.stack([np.sin(la * alpha),
                  np.sin(lb * beta) * nu_a,
                  np.sin(lg * gamma) * nu_a * nu_b], axis=-1)
    c = np.stack([np.cos(la * alpha),
                  np.cos(lb * beta),
                  np.cos(lg * gamma)], axis=-1)
    return np.stack([s, c], axis=-2)


def _branch(s, c, k):
    """Angle from one (sin, cos) column of a degree-k axis."""
    arc = np.arccos(np.clip(c, -1.0, 1.0))
    return np.where(s < 0, (TWO_PI - arc) / k, arc / k)


def recover_angles(values, cls):
    """Sequential inverse of ``forward_values``.

    Returns (alpha, beta, gamma, degenerate).  For standard classes a later
    angle's sin sign is read through the accumulated nu product; when that
    product is below the singularity tolerance the principal branch is used
    and ``degenerate`` is set.  Flip classes use their own branch rules and
    may return a pitch on the mirrored side of the interval together with a
    negated yaw; the result is always normalized into [0, 2*pi) and maps to
    a visually identical pose.
    """
    values = np.asarray(values, dtype=float)
    s = values[..., 0, :]
    c = values[..., 1, :]
    ka, kb, kg = cls.kappa

    if cls.clamp_style == CLAMP_CLASS_V:
        alpha = _branch(s[..., 0], c[..., 0], 1.0)
        beta = _branch(s[..., 1], c[..., 1], 2.0)
        gamma_p = _branch(s[..., 2], c[..., 2], 1.0)
        gamma = _wrap(np.where(s[..., 1] < 0, -gamma_p, gamma_p), TWO_PI)
        return alpha, beta, gamma, np.zeros(np.shape(alpha), dtype=bool)

    def axis(idx, k, nu_acc, degenerate):
        if math.isinf(k):
            return np.zeros_like(s[..., idx]), degenerate
        singular = np.abs(nu_acc) < SINGULARITY_TOL
        # sign(s / nu) without dividing by a vanishing nu; principal
        # (nonnegative) branch when the sign is unrecoverable
        eff_sign = np.where(singular, 1.0, np.sign(nu_acc) * s[..., idx])
        arc = np.arccos(np.clip(c[..., idx], -1.0, 1.0))
        theta = np.where(eff_sign < 0, (TWO_PI - arc) / k, arc / k)
        return theta, degenerate | singular

    degenerate = np.zeros(np.shape(s[..., 0]), dtype=bool)
    one = np.ones_like(s[..., 0])

    alpha, degenerate = axis(0, ka, one, degenerate)
    nu_a = np.cos(alpha) if _nu_applies(ka) else one
    beta, degenerate = axis(1, kb, nu_a, degenerate)
    nu_b = np.cos(beta) if _nu_applies(kb) else one
    gamma, degenerate = axis(2, kg, nu_a * nu_b, degenerate)
    return alpha, beta, gamma, degenerate


def clamp_to_canonic(euler, cls):
    """Clamp an Euler triple (radians) to the canonic space of a class."""
    a, b, g = euler
    a_c, b_c, g_c = clamp_angles(a, b, g, cls)
    return CanonicEuler(float(a_c), float(b_c), float(g_c), cls)


def sarr_forward(canonic):
    """Encode a CanonicEuler."""
    c = canonic
    vals = forward_values(c.alpha, c.beta, c.gamma, c.sym_class)
    return SarrValue(vals, c.sym_class)


def sarr_inverse(value):
    """Decode a SarrValue back to canonic Euler angles."""
    a, b, g, degenerate = recover_angles(value.values, value.sym_class)
    return CanonicEuler(float(a), float(b), float(g), value.sym_class,
                        bool(degenerate))


def canonic_matrices(m, cls):
    """Batch form of ``canonic_matrix``; accepts shape (..., 3, 3)."""
    a0, b0, g0 = rotations.matrix_to_euler(m)
    a_c, b_c, g_c = clamp_angles(a0, b0, g0, cls)
    vals = forward_values(a_c, b_c, g_c, cls)
    a1, b1, g1, _ = recover_angles(vals, cls)
    return rotations.euler_to_matrix(a1, b1, g1)


def canonic_matrix(m, cls):
    """Map a rotation matrix to its canonic representative for a class.

    The output is idempotent under re-application and represents the same
    appearance as the input for every catalogued symmetry of the class.
    """
    m = rotations.check_rotation_matrix(m, tol=1e-6)
    return canonic_matrices(m, cls)


def sarr_flat(value):
    """Flatten a SarrValue to (s_a, c_a, s_b, c_b, s_g, c_g)."""
    return np.asarray(value.values, dtype=float).T.reshape(6).copy()


def sarr_unflatten(vec, cls):
    """Rebuild a valid SarrValue from a flat 6-vector.

    Accepts noisy input (e.g. raw network output): each column is divided
    by the recoverable nu product, renormalized to unit length, decoded,
    and re-encoded, so the result always satisfies the value invariants.
    Columns of continuous axes are constant and are reset to (0, 1).
    """
    vec = np.asarray(vec, dtype=float).reshape(-1)
    if vec.shape != (6,):
        raise ValueError(f"flat encoding must have 6 entries, got {vec.shape[0]}")
    cols = vec.reshape(3, 2)  # rows: (s, c) per angle
    ka, kb, kg = cls.kappa

    if cls.clamp_style == CLAMP_CLASS_V:
        alpha = _decode_column(cols[0], 1.0, 1.0, "alpha")
        beta = _decode_column(cols[1], 2.0, 1.0, "beta")
        nu_mag = abs(math.cos(beta))
        gamma_p = _decode_column(cols[2], 1.0, nu_mag, "gamma")
        gamma = float(_wrap(-gamma_p if cols[1][0] < 0 else gamma_p, TWO_PI))
        return sarr_forward(CanonicEuler(alpha, beta, gamma, cls))

    nu_acc = 1.0
    angles = []
    for idx, (col, k) in enumerate(zip(cols, (ka, kb, kg))):
        name = ("alpha", "beta", "gamma")[idx]
        if math.isinf(k):
            angles.append(0.0)
            continue
        theta = _decode_column(col, float(k), nu_acc, name)
        angles.append(theta)
        if _nu_applies(k):
            nu_acc *= math.cos(theta)
    return sarr_forward(CanonicEuler(angles[0], angles[1], angles[2], cls))


def _decode_column(col, k, nu, name):
    """Recover an angle from a possibly unnormalized (sin, cos) column.

    ``nu`` carries the signed accumulated multiplier on the sin entry; when
    it is numerically zero the principal (nonnegative sin) branch is used.
    """
    s_raw, c_raw = float(col[0]), float(col[1])
    s_adj = 0.0 if abs(nu) < SINGULARITY_TOL else s_raw / nu
    # plain IEEE ops so ports reproduce the same bits (hypot rounding is
    # implementation-defined and the downstream arccos amplifies it)
    norm = math.sqrt(s_adj * s_adj + c_raw * c_raw)
    if norm < COLUMN_NORM_TOL:
        raise DegenerateValueError(
            f"{name} column has near-zero norm {norm:.3e}; cannot normalize")
    s_n, c_n = s_adj / norm, c_raw / norm
    arc = math.acos(min(1.0, max(-1.0, c_n)))
    return (TWO_PI - arc) / k if s_n < 0 else arc / k

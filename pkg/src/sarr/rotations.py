"""Conversions among rotation representations.

All Euler angles are intrinsic XYZ: rotate about x by alpha, about the new y
by beta, about the new z by gamma.  The equivalent matrix acting on column
vectors is ``R_x(alpha) @ R_y(beta) @ R_z(gamma)``.  Angles are radians;
degrees appear only at CLI and file boundaries.

Every function broadcasts over leading batch dimensions, so a single 3x3
matrix and a stack of shape (N, 3, 3) are both accepted.
"""

from __future__ import annotations

import numpy as np

ORTHONORMAL_TOL = 1e-9
GIMBAL_TOL = 1e-9


class DegenerateInputError(ValueError):
    """Input is too degenerate to define a rotation (zero/parallel vectors)."""


def rot_x(angle):
    """Elementary rotation about the x axis."""
    a = np.asarray(angle, dtype=float)
    c, s = np.cos(a), np.sin(a)
    one, zero = np.ones_like(c), np.zeros_like(c)
    rows = [[one, zero, zero], [zero, c, -s], [zero, s, c]]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)


def rot_y(angle):
    """Elementary rotation about the y axis."""
    a = np.asarray(angle, dtype=float)
    c, s = np.cos(a), np.sin(a)
    one, zero = np.ones_like(c), np.zeros_like(c)
    rows = [[c, zero, s], [zero, one, zero], [-s, zero, c]]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)


def rot_z(angle):
    """Elementary rotation about the z axis."""
    a = np.asarray(angle, dtype=float)
    c, s = np.cos(a), np.sin(a)
    one, zero = np.ones_like(c), np.zeros_like(c)
    rows = [[c, -s, zero], [s, c, zero], [zero, zero, one]]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)


def euler_to_matrix(alpha, beta, gamma):
    """Build the rotation matrix R_x(alpha) @ R_y(beta) @ R_z(gamma)."""
    return rot_x(alpha) @ rot_y(beta) @ rot_z(gamma)


def is_rotation_matrix(m, tol=ORTHONORMAL_TOL):
    """True when m has orthonormal columns and determinant 1 within tol."""
    m = np.asarray(m, dtype=float)
    if m.shape[-2:] != (3, 3):
        return False
    eye = np.eye(3)
    ortho = np.max(np.abs(np.swapaxes(m, -1, -2) @ m - eye), axis=(-2, -1))
    det = np.linalg.det(m)
    return bool(np.all(ortho < tol) and np.all(np.abs(det - 1.0) < tol))


def check_rotation_matrix(m, tol=ORTHONORMAL_TOL, what="rotation matrix"):
    """Validate and return m as float array; raise ValueError otherwise."""
    m = np.asarray(m, dtype=float)
    if m.shape[-2:] != (3, 3):
        raise ValueError(f"{what} must be 3x3, got shape {m.shape}")
    if not is_rotation_matrix(m, tol):
        raise ValueError(f"{what} is not orthonormal within {tol:g}")
    return m


def matrix_to_euler(m):
    """Decompose a rotation matrix into intrinsic XYZ Euler angles.

    Returns (alpha, beta, gamma) normalized to [0, 2*pi).  The pitch branch
    with |beta| <= pi/2 is chosen.  At gimbal lock (|cos beta| < 1e-9) the
    convention is gamma = 0 with alpha absorbing the residual rotation, so
    the result always recomposes to the input matrix.
    """
    m = np.asarray(m, dtype=float)
    sb = np.clip(m[..., 0, 2], -1.0, 1.0)
    cb = np.sqrt(np.maximum(0.0, 1.0 - sb * sb))
    locked = cb < GIMBAL_TOL

    beta = np.arcsin(sb)
    alpha = np.arctan2(-m[..., 1, 2], m[..., 2, 2])
    gamma = np.arctan2(-m[..., 0, 1], m[..., 0, 0])

    # beta = +pi/2: rows encode alpha+gamma; beta = -pi/2: gamma-alpha.
    residual = np.arctan2(m[..., 1, 0], m[..., 1, 1])
    alpha_lock = np.where(sb > 0, residual, -residual)
    alpha = np.where(locked, alpha_lock, alpha)
    gamma = np.where(locked, 0.0, gamma)

    two_pi = 2.0 * np.pi
    return alpha % two_pi, beta % two_pi, gamma % two_pi


def matrix_to_quaternion(m):
    """Convert a rotation matrix to a canonic unit quaternion (w, x, y, z).

    Canonic cover: w > 0, or w == 0 and the first nonzero of (x, y, z) > 0,
    so q and -q map to the same output.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim == 2:
        return _single_quaternion(m)
    flat = m.reshape(-1, 3, 3)
    out = np.stack([_single_quaternion(r) for r in flat])
    return out.reshape(m.shape[:-2] + (4,))


def _single_quaternion(m):
    t = np.trace(m)
    if t > 0:
        r = np.sqrt(1.0 + t)
        s = 0.5 / r
        q = np.array([
            0.5 * r,
            (m[2, 1] - m[1, 2]) * s,
            (m[0, 2] - m[2, 0]) * s,
            (m[1, 0] - m[0, 1]) * s,
        ])
    else:
        i = int(np.argmax(np.diag(m)))
        j, k = (i + 1) % 3, (i + 2) % 3
        r = np.sqrt(1.0 + m[i, i] - m[j, j] - m[k, k])
        s = 0.5 / r
        q = np.empty(4)
        q[0] = (m[k, j] - m[j, k]) * s
        q[1 + i] = 0.5 * r
        q[1 + j] = (m[j, i] + m[i, j]) * s
        q[1 + k] = (m[k, i] + m[i, k]) * s
    q /= np.linalg.norm(q)
    return canonic_quaternion(q)


def canonic_quaternion(q):
    """Map q and -q to one representative: w > 0, tie broken by the first
    nonzero vector component being positive."""
    q = np.asarray(q, dtype=float)
    for comp in q:
        if comp > 0:
            return q.copy()
        if comp < 0:
            return -q
    return q.copy()


def quaternion_to_matrix(q):
    """Convert a unit quaternion (w, x, y, z) to a rotation matrix."""
    q = np.asarray(q, dtype=float)
    n = np.linalg.norm(q, axis=-1)
    if np.any(np.abs(n - 1.0) > 1e-6):
        raise ValueError("quaternion is not unit length")
    w, x, y, z = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    rows = [
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)


def matrix_to_sixd(m):
    """First two columns of the rotation matrix, flattened to 6 numbers."""
    m = np.asarray(m, dtype=float)
    return np.concatenate([m[..., :, 0], m[..., :, 1]], axis=-1)


def sixd_to_matrix(s):
    """Gram-Schmidt the two stored 3-vectors and complete by cross product.

    Raises DegenerateInputError when the first vector is (numerically) zero
    or the two vectors are parallel.
    """
    s = np.asarray(s, dtype=float)
    if s.shape[-1] != 6:
        raise ValueError(f"sixd value must have 6 entries, got {s.shape}")
    a1, a2 = s[..., :3], s[..., 3:]
    n1 = np.linalg.norm(a1, axis=-1, keepdims=True)
    if np.any(n1 < 1e-9):
        raise DegenerateInputError("first sixd vector is zero")
    b1 = a1 / n1
    a2p = a2 - np.sum(b1 * a2, axis=-1, keepdims=True) * b1
    n2 = np.linalg.norm(a2p, axis=-1, keepdims=True)
    if np.any(n2 < 1e-9):
        raise DegenerateInputError("sixd vectors are parallel")
    b2 = a2p / n2
    b3 = np.cross(b1, b2)
    return np.stack([b1, b2, b3], axis=-1)


def euler_to_trig(alpha, beta, gamma):
    """Plain trigonometric representation: per-angle (sin, cos) columns."""
    a = np.stack([np.asarray(alpha, dtype=float),
                  np.asarray(beta, dtype=float),
                  np.asarray(gamma, dtype=float)], axis=-1)
    return np.stack([np.sin(a), np.cos(a)], axis=-2)


def random_rotations(n, rng=None):
    """n rotation matrices uniform over SO(3), via normalized 4-Gaussians."""
    rng = np.random.default_rng(rng)
    q = rng.standard_normal((n, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    return quaternion_to_matrix(q)

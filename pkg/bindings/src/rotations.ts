// Intrinsic-XYZ rotation conversions, mirroring the primary library's
// conventions bit-for-bit where floating point allows.

export type Mat3 = number[][]; // 3x3, row major

const TWO_PI = 2 * Math.PI;
const GIMBAL_TOL = 1e-9;

/** Modulo into [0, period), guarding the rounding case that lands on the
 *  period itself. */
export function wrap(theta: number, period: number): number {
  let r = theta % period;
  if (r < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

function clip(x: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, x));
}

export function rotX(a: number): Mat3 {
  const c = Math.cos(a), s = Math.sin(a);
  return [[1, 0, 0], [0, c, -s], [0, s, c]];
}

export function rotY(b: number): Mat3 {
  const c = Math.cos(b), s = Math.sin(b);
  return [[c, 0, s], [0, 1, 0], [-s, 0, c]];
}

export function rotZ(g: number): Mat3 {
  const c = Math.cos(g), s = Math.sin(g);
  return [[c, -s, 0], [s, c, 0], [0, 0, 1]];
}

export function matMul(a: Mat3, b: Mat3): Mat3 {
  const out: Mat3 = [[0, 0, 0], [0, 0, 0], [0, 0, 0]];
  for (let i = 0; i < 3; i++) {
    for (let j = 0; j < 3; j++) {
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    }
  }
  return out;
}

export function eulerToMatrix(alpha: number, beta: number, gamma: number): Mat3 {
  return matMul(matMul(rotX(alpha), rotY(beta)), rotZ(gamma));
}

/** Decompose into intrinsic-XYZ angles in [0, 2*pi); pitch branch
 *  |beta| <= pi/2; at gimbal lock gamma = 0 and alpha absorbs the rest. */
export function matrixToEuler(m: Mat3): [number, number, number] {
  const sb = clip(m[0][2], -1, 1);
  const cb = Math.sqrt(Math.max(0, 1 - sb * sb));
  let alpha: number, beta: number, gamma: number;
  beta = Math.asin(sb);
  if (cb < GIMBAL_TOL) {
    const residual = Math.atan2(m[1][0], m[1][1]);
    alpha = sb > 0 ? residual : -residual;
    gamma = 0;
  } else {
    alpha = Math.atan2(-m[1][2], m[2][2]);
    gamma = Math.atan2(-m[0][1], m[0][0]);
  }
  return [wrap(alpha, TWO_PI), wrap(beta, TWO_PI), wrap(gamma, TWO_PI)];
}

export function isRotationMatrix(m: Mat3, tol = 1e-6): boolean {
  if (m.length !== 3 || m.some((row) => row.length !== 3)) return false;
  // orthonormality: M^T M = I
  for (let i = 0; i < 3; i++) {
    for (let j = 0; j < 3; j++) {
      const dot = m[0][i] * m[0][j] + m[1][i] * m[1][j] + m[2][i] * m[2][j];
      if (Math.abs(dot - (i === j ? 1 : 0)) > tol) return false;
    }
  }
  const det =
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return Math.abs(det - 1) <= tol;
}

export function asMat3(value: number[] | number[][]): Mat3 {
  if (Array.isArray(value[0])) {
    const rows = value as number[][];
    if (rows.length !== 3 || rows.some((r) => r.length !== 3)) {
      throw new Error(`matrix must be 3x3, got ${rows.length} rows`);
    }
    return rows.map((r) => r.slice());
  }
  const flat = value as number[];
  if (flat.length !== 9) {
    throw new Error(`flat matrix must have 9 entries, got ${flat.length}`);
  }
  return [flat.slice(0, 3), flat.slice(3, 6), flat.slice(6, 9)];
}

// Symmetry-aware encoding: clamp, forward, inverse, canonic pipeline.
// Port of the primary implementation; every branch and guard is mirrored
// so fixture parity holds to 1e-12.

import { SymmetryClass } from "./catalog.js";
import { Mat3, eulerToMatrix, matMul, matrixToEuler, wrap } from "./rotations.js";

const TWO_PI = 2 * Math.PI;
export const SINGULARITY_TOL = 1e-6;
const COLUMN_NORM_TOL = 1e-6;

export class DegenerateValueError extends Error {}

export interface CanonicEuler {
  alpha: number;
  beta: number;
  gamma: number;
  degenerate: boolean;
}

type Triple = [number, number, number];

function lam(k: number): number {
  return Number.isFinite(k) ? k : 0;
}

function nuApplies(k: number): boolean {
  return k > 1 && Number.isFinite(k);
}

function absorbsHalfTurn(k: number): boolean {
  return !Number.isFinite(k) || (k > 1 && Math.trunc(k) % 2 === 0);
}

function pitchFoldApplies(cls: SymmetryClass): boolean {
  const [ka, kb, kg] = cls.kappa;
  if (!Number.isFinite(kb) || kb <= 1) return false;
  return absorbsHalfTurn(ka) && absorbsHalfTurn(kg);
}

function axisMod(theta: number, k: number): number {
  if (!Number.isFinite(k)) return 0;
  return wrap(theta, TWO_PI / k);
}

export function clampAngles(alpha: number, beta: number, gamma: number,
                            cls: SymmetryClass): Triple {
  if (cls.clampStyle === "class_v") {
    const a = wrap(alpha, TWO_PI);
    if (a > Math.PI) {
      return [wrap(alpha - Math.PI, TWO_PI), -wrap(beta, TWO_PI),
              wrap(Math.PI - gamma, TWO_PI)];
    }
    return [a, wrap(beta, TWO_PI), wrap(gamma, TWO_PI)];
  }
  const [ka, kb, kg] = cls.kappa;
  let aC = axisMod(alpha, ka);
  let bC = axisMod(beta, kb);
  let gC = axisMod(gamma, kg);
  if (pitchFoldApplies(cls)) {
    const bAlt = axisMod(Math.PI - bC, kb);
    if (bAlt < bC) {
      aC = axisMod(aC + Math.PI, ka);
      bC = bAlt;
      gC = axisMod(gC + Math.PI, kg);
    }
  }
  return [aC, bC, gC];
}

/** Row 0 sines, row 1 cosines; column order alpha, beta, gamma. */
export function forwardValues(alpha: number, beta: number, gamma: number,
                              cls: SymmetryClass): number[][] {
  const [ka, kb, kg] = cls.kappa;
  const la = lam(ka), lb = lam(kb), lg = lam(kg);
  const nuA = nuApplies(ka) ? Math.cos(alpha) : 1;
  const nuB = nuApplies(kb) ? Math.cos(beta) : 1;
  return [
    [Math.sin(la * alpha), Math.sin(lb * beta) * nuA,
     Math.sin(lg * gamma) * nuA * nuB],
    [Math.cos(la * alpha), Math.cos(lb * beta), Math.cos(lg * gamma)],
  ];
}

function clip1(x: number): number {
  return Math.min(1, Math.max(-1, x));
}

function branch(s: number, c: number, k: number): number {
  const arc = Math.acos(clip1(c));
  return s < 0 ? (TWO_PI - arc) / k : arc / k;
}

export function recoverAngles(values: number[][],
                              cls: SymmetryClass): CanonicEuler {
  const s = values[0], c = values[1];
  const [ka, kb, kg] = cls.kappa;

  if (cls.clampStyle === "class_v") {
    const alpha = branch(s[0], c[0], 1);
    const beta = branch(s[1], c[1], 2);
    const gammaP = branch(s[2], c[2], 1);
    const gamma = wrap(s[1] < 0 ? -gammaP : gammaP, TWO_PI);
    return { alpha, beta, gamma, degenerate: false };
  }

  let degenerate = false;
  const axis = (idx: number, k: number, nuAcc: number): number => {
    if (!Number.isFinite(k)) return 0;
    const singular = Math.abs(nuAcc) < SINGULARITY_TOL;
    const effSign = singular ? 1 : Math.sign(nuAcc) * s[idx];
    if (singular) degenerate = true;
    const arc = Math.acos(clip1(c[idx]));
    return effSign < 0 ? (TWO_PI - arc) / k : arc / k;
  };

  const alpha = axis(0, ka, 1);
  const nuA = nuApplies(ka) ? Math.cos(alpha) : 1;
  const beta = axis(1, kb, nuA);
  const nuB = nuApplies(kb) ? Math.cos(beta) : 1;
  const gamma = axis(2, kg, nuA * nuB);
  return { alpha, beta, gamma, degenerate };
}

export function canonicMatrix(m: Mat3, cls: SymmetryClass): Mat3 {
  const [a0, b0, g0] = matrixToEuler(m);
  const [aC, bC, gC] = clampAngles(a0, b0, g0, cls);
  const rec = recoverAngles(forwardValues(aC, bC, gC, cls), cls);
  return eulerToMatrix(rec.alpha, rec.beta, rec.gamma);
}

/** Flat layout (s_a, c_a, s_b, c_b, s_g, c_g) of the clamped encoding. */
export function encodeFlat(m: Mat3, cls: SymmetryClass): number[] {
  const [a0, b0, g0] = matrixToEuler(m);
  const [aC, bC, gC] = clampAngles(a0, b0, g0, cls);
  const v = forwardValues(aC, bC, gC, cls);
  return [v[0][0], v[1][0], v[0][1], v[1][1], v[0][2], v[1][2]];
}

function decodeColumn(sRaw: number, cRaw: number, k: number, nu: number,
                      name: string): number {
  const sAdj = Math.abs(nu) < SINGULARITY_TOL ? 0 : sRaw / nu;
  // plain IEEE ops, matching the reference implementation bit-for-bit
  const norm = Math.sqrt(sAdj * sAdj + cRaw * cRaw);
  if (norm < COLUMN_NORM_TOL) {
    throw new DegenerateValueError(
      `${name} column has near-zero norm ${norm.toExponential(3)}`);
  }
  const sN = sAdj / norm, cN = cRaw / norm;
  const arc = Math.acos(clip1(cN));
  return sN < 0 ? (TWO_PI - arc) / k : arc / k;
}

/** Rebuild canonic angles from a flat 6-vector, tolerating unnormalized
 *  input, then return the decoded rotation matrix. */
export function decodeFlat(vec: number[], cls: SymmetryClass): Mat3 {
  if (!Array.isArray(vec) || vec.length !== 6) {
    throw new RangeError(`flat encoding must have 6 entries, got ${vec?.length}`);
  }
  const cols: Array<[number, number]> = [
    [vec[0], vec[1]], [vec[2], vec[3]], [vec[4], vec[5]],
  ];
  const [ka, kb, kg] = cls.kappa;
  let alpha: number, beta: number, gamma: number;

  if (cls.clampStyle === "class_v") {
    alpha = decodeColumn(cols[0][0], cols[0][1], 1, 1, "alpha");
    beta = decodeColumn(cols[1][0], cols[1][1], 2, 1, "beta");
    const nuMag = Math.abs(Math.cos(beta));
    const gammaP = decodeColumn(cols[2][0], cols[2][1], 1, nuMag, "gamma");
    gamma = wrap(cols[1][0] < 0 ? -gammaP : gammaP, TWO_PI);
  } else {
    const names = ["alpha", "beta", "gamma"];
    const ks = [ka, kb, kg];
    const angles: number[] = [];
    let nuAcc = 1;
    for (let i = 0; i < 3; i++) {
      if (!Number.isFinite(ks[i])) {
        angles.push(0);
        continue;
      }
      const theta = decodeColumn(cols[i][0], cols[i][1], ks[i], nuAcc, names[i]);
      angles.push(theta);
      if (nuApplies(ks[i])) nuAcc *= Math.cos(theta);
    }
    [alpha, beta, gamma] = angles as Triple;
  }
  return eulerToMatrix(alpha, beta, gamma);
}

export function composeMatrices(a: Mat3, b: Mat3): Mat3 {
  return matMul(a, b);
}

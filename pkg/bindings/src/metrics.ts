// Rotation error and average-recall scoring, mirroring the primary library.

import { Mat3 } from "./rotations.js";

export const THRESHOLDS_DEG = [2, 5, 10, 15, 25, 40];

/** Angle in degrees between two rotations, in [0, 180]. */
export function rotationError(pred: Mat3, gt: Mat3): number {
  let tr = 0;
  for (let i = 0; i < 3; i++) {
    for (let j = 0; j < 3; j++) {
      tr += pred[i][j] * gt[i][j];
    }
  }
  const cosAngle = Math.min(1, Math.max(-1, (tr - 1) / 2));
  return (Math.acos(cosAngle) * 180) / Math.PI;
}

/** Average recall of errors over the fixed thresholds. */
export function arC(errors: number[], thresholds = THRESHOLDS_DEG): number {
  if (errors.length === 0) {
    throw new RangeError("cannot score an empty error list");
  }
  let total = 0;
  for (const t of thresholds) {
    let hits = 0;
    for (const e of errors) {
      if (e <= t) hits += 1;
    }
    total += hits / errors.length;
  }
  return total / thresholds.length;
}

// In-process bindings for training pipelines: canonic pose mapping, the
// flat 6-value symmetry-aware encoding and its inverse, and the
// symmetry-sensitive score primitives.  Pure functions, no state; outputs
// match the reference implementation on the shared golden fixtures.

import { CatalogError, SymmetryClass, resolveClass } from "./catalog.js";
import {
  DegenerateValueError,
  canonicMatrix as canonicOf,
  decodeFlat,
  encodeFlat,
} from "./codec.js";
import { Mat3, asMat3, isRotationMatrix } from "./rotations.js";
import { arC, rotationError as rotationErrorOf, THRESHOLDS_DEG } from "./metrics.js";

export { CatalogError, DegenerateValueError, THRESHOLDS_DEG };
export type { Mat3, SymmetryClass };
export { resolveClass };

/** Dataset object id (tless/itodd) or primitive name. */
export type ClassSelector = {
  dataset: string;
  object: number | string;
};

function checked(matrix: number[] | number[][]): Mat3 {
  const m = asMat3(matrix);
  if (!isRotationMatrix(m, 1e-6)) {
    throw new RangeError("input is not a rotation matrix (tolerance 1e-6)");
  }
  return m;
}

/** Canonic representative of a rotation for one catalogued object. */
export function canonicRotation(matrix: number[] | number[][],
                                selector: ClassSelector): Mat3 {
  const cls = resolveClass(selector.dataset, selector.object);
  return canonicOf(checked(matrix), cls);
}

/** Flat (s_a, c_a, s_b, c_b, s_g, c_g) training target for a rotation. */
export function encodeRotation(matrix: number[] | number[][],
                               selector: ClassSelector): number[] {
  const cls = resolveClass(selector.dataset, selector.object);
  return encodeFlat(checked(matrix), cls);
}

/** Rotation matrix decoded from a flat 6-value prediction.  Accepts
 *  unnormalized input (e.g. raw network output). */
export function decodeRotation(flat: number[],
                               selector: ClassSelector): Mat3 {
  const cls = resolveClass(selector.dataset, selector.object);
  return decodeFlat(flat, cls);
}

/** Angle in degrees between a prediction and the canonic ground truth. */
export function rotationError(pred: number[] | number[][],
                              gt: number[] | number[][]): number {
  return rotationErrorOf(checked(pred), checked(gt));
}

/** Average recall of rotation errors over the fixed thresholds. */
export function averageRecall(errors: number[]): number {
  return arC(errors);
}

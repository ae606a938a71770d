// Symmetry-class catalog, generated from the primary library's export
// (fixtures/catalog.json). Regenerate together with the fixtures.

export type ClampStyle = "standard" | "class_v";

export interface SymmetryClass {
  dataset: string;
  classId: string;
  /** per-axis symmetry degrees; Infinity marks a continuous axis */
  kappa: [number, number, number];
  clampStyle: ClampStyle;
}

export class CatalogError extends Error {}

const TABLE = new Map<string, SymmetryClass>([
  ["tless/18", { dataset: "tless", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["tless/21", { dataset: "tless", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["tless/22", { dataset: "tless", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["tless/5", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/6", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/7", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/8", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/9", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/10", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/11", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/12", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/25", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/26", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/28", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/29", { dataset: "tless", classId: "II", kappa: [1, 1, 2], clampStyle: "standard" }],
  ["tless/27", { dataset: "tless", classId: "III", kappa: [1, 1, 4], clampStyle: "standard" }],
  ["tless/1", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/2", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/3", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/4", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/13", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/14", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/15", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/16", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/17", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/24", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/30", { dataset: "tless", classId: "IV", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["tless/19", { dataset: "tless", classId: "V", kappa: [1, 2, 1], clampStyle: "class_v" }],
  ["tless/20", { dataset: "tless", classId: "V", kappa: [1, 2, 1], clampStyle: "class_v" }],
  ["tless/23", { dataset: "tless", classId: "V", kappa: [1, 2, 1], clampStyle: "class_v" }],
  ["itodd/1", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/2", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/4", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/5", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/6", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/10", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/13", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/15", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/16", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/20", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/21", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/22", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/26", { dataset: "itodd", classId: "I", kappa: [1, 1, 1], clampStyle: "standard" }],
  ["itodd/3", { dataset: "itodd", classId: "II", kappa: [2, 2, 2], clampStyle: "standard" }],
  ["itodd/11", { dataset: "itodd", classId: "II", kappa: [2, 2, 2], clampStyle: "standard" }],
  ["itodd/19", { dataset: "itodd", classId: "II", kappa: [2, 2, 2], clampStyle: "standard" }],
  ["itodd/7", { dataset: "itodd", classId: "III", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["itodd/23", { dataset: "itodd", classId: "III", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["itodd/24", { dataset: "itodd", classId: "III", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["itodd/27", { dataset: "itodd", classId: "III", kappa: [1, 1, Infinity], clampStyle: "standard" }],
  ["itodd/8", { dataset: "itodd", classId: "IV", kappa: [1, 1, 5], clampStyle: "standard" }],
  ["itodd/9", { dataset: "itodd", classId: "V", kappa: [1, 2, 1], clampStyle: "class_v" }],
  ["itodd/18", { dataset: "itodd", classId: "V", kappa: [1, 2, 1], clampStyle: "class_v" }],
  ["itodd/14", { dataset: "itodd", classId: "VI", kappa: [1, 1, 18], clampStyle: "standard" }],
  ["itodd/17", { dataset: "itodd", classId: "VII", kappa: [1, 1, 23], clampStyle: "standard" }],
  ["itodd/25", { dataset: "itodd", classId: "VIII", kappa: [1, 1, 12], clampStyle: "standard" }],
  ["itodd/12", { dataset: "itodd", classId: "IX", kappa: [2, 2, Infinity], clampStyle: "standard" }],
  ["itodd/28", { dataset: "itodd", classId: "IX", kappa: [2, 2, Infinity], clampStyle: "standard" }],
  ["primitive/CUBOID", { dataset: "primitive", classId: "CUBOID", kappa: [2, 2, 2], clampStyle: "standard" }],
  ["primitive/CUB_XY", { dataset: "primitive", classId: "CUB_XY", kappa: [2, 2, 4], clampStyle: "standard" }],
  ["primitive/CUB_XZ", { dataset: "primitive", classId: "CUB_XZ", kappa: [2, 4, 2], clampStyle: "standard" }],
  ["primitive/CUB_YZ", { dataset: "primitive", classId: "CUB_YZ", kappa: [4, 2, 2], clampStyle: "standard" }],
  ["primitive/CUBE", { dataset: "primitive", classId: "CUBE", kappa: [4, 4, 4], clampStyle: "standard" }],
  ["primitive/CYLINDER", { dataset: "primitive", classId: "CYLINDER", kappa: [2, 2, Infinity], clampStyle: "standard" }],
  ["primitive/TORUS", { dataset: "primitive", classId: "TORUS", kappa: [2, 2, Infinity], clampStyle: "standard" }],
  ["primitive/SPHERE", { dataset: "primitive", classId: "SPHERE", kappa: [Infinity, Infinity, Infinity], clampStyle: "standard" }],
]);

/** Resolve a dataset object id (tless/itodd) or primitive name to its class. */
export function resolveClass(dataset: string, selector: number | string): SymmetryClass {
  const ds = String(dataset).toLowerCase();
  const key = ds === "primitive"
    ? `primitive/${String(selector).toUpperCase()}`
    : `${ds}/${selector}`;
  const found = TABLE.get(key);
  if (!found) {
    throw new CatalogError(`no catalog entry for dataset ${dataset}, object ${selector}`);
  }
  return found;
}

export function catalogSize(): number {
  return TABLE.size;
}


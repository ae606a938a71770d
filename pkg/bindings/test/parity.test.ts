// Golden-fixture parity: every output must match the reference
// implementation within 1e-12 on the shared fixture file.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import {
  averageRecall,
  canonicRotation,
  encodeRotation,
  rotationError,
} from "../src/index.js";
import { asMat3 } from "../src/rotations.js";

const HERE = dirname(fileURLToPath(import.meta.url));
const GOLDEN = JSON.parse(
  readFileSync(join(HERE, "..", "..", "fixtures", "golden.json"), "utf-8"),
);

const PARITY_TOL = 1e-12;

interface GoldenCase {
  matrix: number[];
  canonic: number[];
  flat: number[];
  decoded: number[];
}

interface GoldenClass {
  dataset: string;
  class_id: string;
  object_id: number | string;
  cases: GoldenCase[];
}

function maxAbsDiff(a: number[], b: number[]): number {
  let worst = 0;
  for (let i = 0; i < a.length; i++) {
    worst = Math.max(worst, Math.abs(a[i] - b[i]));
  }
  return worst;
}

describe("golden parity", () => {
  for (const cls of GOLDEN.classes as GoldenClass[]) {
    const selector = { dataset: cls.dataset, object: cls.object_id };
    it(`${cls.dataset}-${cls.class_id}: canonic + flat on ${cls.cases.length} rotations`, () => {
      let worstCanonic = 0;
      let worstFlat = 0;
      for (const c of cls.cases) {
        const canonic = canonicRotation(c.matrix, selector).flat();
        worstCanonic = Math.max(worstCanonic, maxAbsDiff(canonic, c.canonic));
        const flat = encodeRotation(c.matrix, selector);
        worstFlat = Math.max(worstFlat, maxAbsDiff(flat, c.flat));
      }
      expect(worstCanonic).toBeLessThan(PARITY_TOL);
      expect(worstFlat).toBeLessThan(PARITY_TOL);
    });
  }

  it("rotation errors match", () => {
    for (const c of GOLDEN.rotation_error_cases) {
      const got = rotationError(c.a, c.b);
      expect(Math.abs(got - c.deg)).toBeLessThan(PARITY_TOL);
    }
  });

  it("average recalls match", () => {
    for (const c of GOLDEN.ar_c_cases) {
      expect(Math.abs(averageRecall(c.errors) - c.ar_c)).toBeLessThan(PARITY_TOL);
    }
  });

});

describe("decode parity", () => {
  it("decode(flat) matches the reference decoder on every case", async () => {
    const { decodeRotation } = await import("../src/index.js");
    for (const cls of GOLDEN.classes as GoldenClass[]) {
      const selector = { dataset: cls.dataset, object: cls.object_id };
      let worst = 0;
      for (const c of cls.cases) {
        const decoded = (decodeRotation(c.flat, selector) as number[][]).flat();
        worst = Math.max(worst, maxAbsDiff(decoded, c.decoded));
      }
      expect(worst, `${cls.dataset}-${cls.class_id}`).toBeLessThan(PARITY_TOL);
    }
  });
});

describe("fixture sanity", () => {
  it("covers 22 classes with the advertised case count", () => {
    expect(GOLDEN.classes.length).toBe(22);
    for (const cls of GOLDEN.classes as GoldenClass[]) {
      expect(cls.cases.length).toBe(GOLDEN.cases_per_class);
    }
  });

  it("stored inputs are rotation matrices", () => {
    const c = (GOLDEN.classes as GoldenClass[])[0].cases[0];
    expect(asMat3(c.matrix).length).toBe(3);
  });
});

"""Regenerate the golden parity fixtures under fixtures/.

The fixture file records, for every catalogued class, rotations drawn from
a fixed seed together with the primary implementation's canonic matrices
and flat encodings, plus rotation-error and score cases.  Ports in other
languages verify against it at 1e-12.

Usage: python scripts/make_golden.py [--cases N]
"""

import argparse
import json
from pathlib import Path

import numpy as np

from sarr import codec, metrics, registry
from sarr.rotations import matrix_to_euler, random_rotations

ROOT = Path(__file__).resolve().parent.parent
SEED = 977101


def _decode(flat, cls):
    from sarr.rotations import euler_to_matrix

    value = codec.sarr_unflatten(flat, cls)
    c = codec.sarr_inverse(value)
    return euler_to_matrix(c.alpha, c.beta, c.gamma)


def class_entry(cls, object_id, n_cases, rng):
    ms = random_rotations(n_cases, rng)
    canonic = codec.canonic_matrices(ms, cls)
    a, b, g = matrix_to_euler(ms)
    a_c, b_c, g_c = codec.clamp_angles(a, b, g, cls)
    flat = codec.forward_values(a_c, b_c, g_c, cls)
    flat = np.swapaxes(flat, -1, -2).reshape(n_cases, 6)
    return {
        "dataset": cls.dataset,
        "class_id": cls.class_id,
        "object_id": object_id,
        "kappa": cls.kappa_json(),
        "cases": [
            {
                "matrix": [float(x) for x in ms[i].reshape(9)],
                "canonic": [float(x) for x in canonic[i].reshape(9)],
                "flat": [float(x) for x in flat[i]],
                "decoded": [float(x) for x in _decode(flat[i], cls).reshape(9)],
            }
            for i in range(n_cases)
        ],
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cases", type=int, default=1000)
    args = parser.parse_args()

    rng = np.random.default_rng(SEED)
    classes = []
    for dataset in registry.DATASETS:
        for cls, member_ids in registry.list_classes(dataset):
            object_id = member_ids[0] if member_ids else cls.class_id
            classes.append(class_entry(cls, object_id, args.cases, rng))

    error_pool = random_rotations(400, rng)
    error_cases = [
        {
            "a": [float(x) for x in error_pool[i].reshape(9)],
            "b": [float(x) for x in error_pool[i + 200].reshape(9)],
            "deg": float(metrics.rotation_error(error_pool[i], error_pool[i + 200])),
        }
        for i in range(200)
    ]
    score_cases = []
    for _ in range(20):
        errors = [float(x) for x in rng.uniform(0, 180, int(rng.integers(1, 40)))]
        score_cases.append({"errors": errors, "ar_c": metrics.ar_c(errors)})

    fixtures = ROOT / "fixtures"
    fixtures.mkdir(exist_ok=True)
    golden = {
        "seed": SEED,
        "cases_per_class": args.cases,
        "classes": classes,
        "rotation_error_cases": error_cases,
        "ar_c_cases": score_cases,
    }
    (fixtures / "golden.json").write_text(
        json.dumps(golden, separators=(",", ":")) + "\n")
    (fixtures / "catalog.json").write_text(
        json.dumps(registry.export_catalog(), indent=1) + "\n")
    n_total = sum(len(c["cases"]) for c in classes)
    print(f"wrote {n_total} cases over {len(classes)} classes")


if __name__ == "__main__":
    main()

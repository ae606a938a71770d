"""Command-line surface: convert annotations, evaluate predictions, run
property scans, inspect the symmetry catalog.

Angles are degrees at this boundary.  Exit codes: 0 success or scan pass,
1 scan failure, 2 usage error, 3 I/O, parse, or catalog error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import bop, metrics, registry, validate

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sarr",
        description="Symmetry-aware rotation toolkit: canonic annotation "
                    "conversion, symmetry-sensitive evaluation, catalog "
                    "inspection, and representation certification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, datasets=(registry.TLESS, registry.ITODD)):
        p.add_argument("--dataset", required=True, choices=datasets)
        p.add_argument("--itodd-alternative", default=True,
                       action=argparse.BooleanOptionalAction,
                       help="use the alternative ITODD classification "
                            "(screw 23 continuous, 2/4/5 non-symmetric); "
                            "on by default")

    p = sub.add_parser("convert", help="rewrite a scene_gt file with canonic rotations")
    add_common(p)
    p.add_argument("--gt", required=True, help="scene_gt JSON path")
    p.add_argument("--out", required=True, help="output JSON path")
    p.add_argument("--scene", type=int, default=0)

    p = sub.add_parser("eval", help="score predictions against annotations")
    add_common(p)
    p.add_argument("--task", required=True, choices=(metrics.SISO, metrics.VIVO))
    p.add_argument("--gt", required=True, help="scene_gt JSON path")
    p.add_argument("--pred", required=True, help="results CSV path")
    p.add_argument("--gt-info", help="scene_gt_info JSON (required for siso)")
    p.add_argument("--out", help="write the report JSON here")
    p.add_argument("--scene", type=int, default=0)

    p = sub.add_parser("validate", help="run uniqueness and continuity scans")
    add_common(p, datasets=registry.DATASETS)
    p.add_argument("--class", dest="class_id", required=True,
                   help="class label, e.g. II or CUBE")
    p.add_argument("--step", type=float, default=1.0, help="grid step, degrees")
    p.add_argument("--out", help="write the scan report JSON here")
    p.add_argument("--grid-out", help="write heatmap grid CSV here")
    p.add_argument("--grid-value", default="s_gamma",
                   choices=sorted(validate.VALUE_SELECTORS))

    p = sub.add_parser("inspect", help="print catalog entries")
    add_common(p, datasets=registry.DATASETS)
    p.add_argument("--object", help="object id (or primitive name)")
    p.add_argument("--export", action="store_true",
                   help="dump the full catalog as JSON")
    return parser


def _describe(cls, alt):
    kappa = ",".join(str(k) for k in cls.kappa_json())
    lines = [f"class {cls.class_id} kappa [{kappa}]"]
    lines.append(f"  clamp: {cls.clamp_style}")
    gens = [f"{axis}:{angle:.6f}rad" for axis, angle in cls.generators]
    gens += [f"{axis}:continuous" for axis in cls.continuous_axes]
    lines.append(f"  generators: {', '.join(gens) if gens else '(none)'}")
    ids = registry.members(cls, alt)
    if ids:
        lines.append(f"  members: {', '.join(str(i) for i in ids)}")
    return "\n".join(lines)


def cmd_convert(args):
    records = bop.read_scene_gt(args.gt, scene_id=args.scene)
    converted = bop.convert_to_canonic(records, args.dataset,
                                       args.itodd_alternative)
    bop.write_scene_gt(converted, args.out)
    counts = Counter(
        registry.lookup(args.dataset, r.object_id, args.itodd_alternative).class_id
        for r in records)
    for class_id in sorted(counts):
        print(f"class {class_id}: {counts[class_id]}")
    print(f"wrote {len(converted)} records to {args.out}")
    return EXIT_OK


def cmd_eval(args):
    if args.task == metrics.SISO and not args.gt_info:
        print("eval: --gt-info is required for the siso task", file=sys.stderr)
        return EXIT_USAGE
    gt = bop.read_scene_gt(args.gt, scene_id=args.scene)
    if args.gt_info:
        gt = bop.merge_visibility(gt, bop.read_scene_gt_info(args.gt_info))
    preds = bop.read_results_csv(args.pred, scene_id=None)
    report = metrics.evaluate(gt, preds, args.task, args.dataset,
                              args.itodd_alternative)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    print(f"AR_C {report.ar_c:.4f}")
    return EXIT_OK


def cmd_validate(args):
    try:
        cls = registry.class_by_label(args.dataset, args.class_id,
                                      args.itodd_alternative)
    except registry.CatalogError as exc:
        print(f"sarr validate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = validate.uniqueness_scan(cls, args.step).merged(
        validate.continuity_scan(cls, args.step))
    if args.grid_out:
        rows = validate.emit_grid(cls, args.grid_value, max(args.step, 1.0))
        validate.write_grid_csv(rows, args.grid_out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    status = "pass" if report.passed else "FAIL"
    print(f"{cls.label} step {args.step:g}: {status} "
          f"(uniqueness {report.max_uniqueness_deviation:.3e}, "
          f"continuity {report.max_adjacent_delta:.6f} "
          f"<= {report.lipschitz_bound:.6f} + tol)")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_inspect(args):
    if args.export:
        print(json.dumps(registry.export_catalog(args.itodd_alternative), indent=2))
        return EXIT_OK
    if args.object is None:
        for cls, ids in registry.list_classes(args.dataset, args.itodd_alternative):
            print(_describe(cls, args.itodd_alternative))
        return EXIT_OK
    try:
        cls = registry.lookup(args.dataset, args.object, args.itodd_alternative)
    except registry.CatalogError as exc:
        print(f"sarr inspect: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(_describe(cls, args.itodd_alternative))
    return EXIT_OK


HANDLERS = {
    "convert": cmd_convert,
    "eval": cmd_eval,
    "validate": cmd_validate,
    "inspect": cmd_inspect,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return HANDLERS[args.command](args)
    except (OSError, bop.BopFormatError, registry.CatalogError,
            metrics.MissingVisibilityError) as exc:
        print(f"sarr {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"sarr {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

import math

import numpy as np
import pytest

from helpers import all_classes, class_ids
from sarr import registry
from sarr.registry import (
    INFINITE,
    CatalogError,
    export_catalog,
    list_classes,
    lookup,
    primitive_class,
)
from sarr.rotations import euler_to_matrix


class TestLookup:
    def test_tless_27(self):
        cls = lookup("tless", 27)
        assert cls.class_id == "III"
        assert cls.kappa == (1, 1, 4)

    def test_itodd_17(self):
        cls = lookup("itodd", 17)
        assert cls.class_id == "VII"
        assert cls.kappa == (1, 1, 23)

    def test_itodd_screw_under_both_classifications(self):
        alt = lookup("itodd", 23, itodd_alternative=True)
        assert alt.class_id == "III"
        assert alt.kappa == (1, 1, INFINITE)
        orig = lookup("itodd", 23, itodd_alternative=False)
        assert orig.class_id != "III"
        assert not math.isinf(orig.kappa[2]) and orig.kappa[2] > 1

    def test_itodd_245_reclassified(self):
        for obj in (2, 4, 5):
            assert lookup("itodd", obj).class_id == "I"
            assert lookup("itodd", obj, itodd_alternative=False).class_id != "I"

    def test_unknown_dataset(self):
        with pytest.raises(CatalogError):
            lookup("ycbv", 1)

    def test_out_of_range(self):
        with pytest.raises(CatalogError):
            lookup("tless", 31)
        with pytest.raises(CatalogError):
            lookup("itodd", 0)


class TestPrimitives:
    @pytest.mark.parametrize("name,kappa", [
        ("CUBOID", (2, 2, 2)),
        ("CUB_XY", (2, 2, 4)),
        ("CUB_XZ", (2, 4, 2)),
        ("CUB_YZ", (4, 2, 2)),
        ("CUBE", (4, 4, 4)),
        ("CYLINDER", (2, 2, INFINITE)),
        ("TORUS", (2, 2, INFINITE)),
        ("SPHERE", (INFINITE, INFINITE, INFINITE)),
    ])
    def test_kappa(self, name, kappa):
        assert primitive_class(name).kappa == kappa

    def test_unknown_name(self):
        with pytest.raises(CatalogError):
            primitive_class("PYRAMID")

    def test_case_insensitive(self):
        assert primitive_class("cube").class_id == "CUBE"


class TestListClasses:
    def test_tless_has_five(self):
        classes = list_classes("tless")
        assert len(classes) == 5

    def test_tless_class_iv_members(self):
        members = dict((c.class_id, ids) for c, ids in list_classes("tless"))
        assert set(members["IV"]) == {1, 2, 3, 4, 13, 14, 15, 16, 17, 24, 30}

    def test_itodd_has_nine(self):
        for alt in (True, False):
            assert len(list_classes("itodd", alt)) == 9

    def test_itodd_class_ix(self):
        members = dict((c.class_id, ids) for c, ids in list_classes("itodd"))
        assert set(members["IX"]) == {12, 28}
        cls = dict((c.class_id, c) for c, _ in list_classes("itodd"))["IX"]
        assert cls.kappa == (2, 2, INFINITE)

    def test_primitive_has_eight(self):
        assert len(list_classes("primitive")) == 8

    @pytest.mark.parametrize("dataset,alt", [
        ("tless", True), ("itodd", True), ("itodd", False),
    ])
    def test_full_coverage_no_overlap(self, dataset, alt):
        seen = []
        for _, ids in list_classes(dataset, alt):
            seen.extend(ids)
        assert sorted(seen) == list(registry.OBJECT_RANGES[dataset])

    def test_class_v_membership(self):
        tless_v = dict((c.class_id, ids) for c, ids in list_classes("tless"))["V"]
        itodd_v = dict((c.class_id, ids) for c, ids in list_classes("itodd"))["V"]
        assert set(tless_v) == {19, 20, 23}
        assert set(itodd_v) == {9, 18}


class TestClassProperties:
    @pytest.mark.parametrize("cls", all_classes(), ids=class_ids())
    def test_clamp_style_rule(self, cls):
        assert (cls.clamp_style == registry.CLAMP_CLASS_V) == (cls.kappa == (1, 2, 1))

    @pytest.mark.parametrize("cls", all_classes(), ids=class_ids())
    def test_generator_powers_to_identity(self, cls):
        axis_arg = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}
        for axis, k in zip("xyz", cls.kappa):
            if math.isinf(k) or k <= 1:
                continue
            step = 2 * math.pi / k
            unit = np.array(axis_arg[axis], dtype=float) * step
            m = euler_to_matrix(*unit)
            np.testing.assert_allclose(np.linalg.matrix_power(m, int(k)),
                                       np.eye(3), atol=1e-9)

    @pytest.mark.parametrize("cls", all_classes(), ids=class_ids())
    def test_generator_count(self, cls):
        expected = sum(int(k) - 1 for k in cls.kappa
                       if not math.isinf(k) and k > 1)
        assert len(cls.generators) == expected


class TestExport:
    def test_rows_cover_everything(self):
        rows = export_catalog()
        tless = [r for r in rows if r["dataset"] == "tless"]
        itodd = [r for r in rows if r["dataset"] == "itodd"]
        prims = [r for r in rows if r["dataset"] == "primitive"]
        assert len(tless) == 30 and len(itodd) == 28 and len(prims) == 8

    def test_infinite_spelled_inf(self):
        rows = export_catalog()
        screw = next(r for r in rows
                     if r["dataset"] == "itodd" and r["object_id"] == 23)
        assert screw["kappa"] == [1, 1, "inf"]

    def test_itodd_flag_changes_export(self):
        default = export_catalog(itodd_alternative=True)
        original = export_catalog(itodd_alternative=False)
        changed = [
            (a["object_id"], a["class_id"], b["class_id"])
            for a, b in zip(default, original) if a != b
        ]
        assert sorted(x[0] for x in changed) == [2, 4, 5, 23]

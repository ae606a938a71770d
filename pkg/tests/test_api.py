"""Package-level convenience surface used by training pipelines."""

import numpy as np
import pytest

import sarr
from sarr.registry import CatalogError
from sarr.rotations import euler_to_matrix

deg = np.deg2rad


class TestResolveClass:
    def test_dataset_object(self):
        assert sarr.resolve_class("tless", 27).class_id == "III"

    def test_primitive_name(self):
        assert sarr.resolve_class("primitive", "cube").class_id == "CUBE"

    def test_itodd_flag(self):
        default = sarr.resolve_class("itodd", 23)
        original = sarr.resolve_class("itodd", 23, itodd_alternative=False)
        assert default.class_id != original.class_id

    def test_unknown(self):
        with pytest.raises(CatalogError):
            sarr.resolve_class("tless", 0)


class TestConvenienceRoundTrip:
    def test_canonic_rotation(self):
        out = sarr.canonic_rotation(euler_to_matrix(0, 0, deg(190)), "tless", 11)
        np.testing.assert_allclose(out, euler_to_matrix(0, 0, deg(10)), atol=1e-9)

    def test_encode_layout(self):
        flat = sarr.encode_rotation(np.eye(3), "tless", 11)
        np.testing.assert_allclose(flat, [0, 1, 0, 1, 0, 1], atol=1e-12)

    def test_decode_inverts_encode(self):
        m = euler_to_matrix(deg(40), deg(20), deg(75))
        flat = sarr.encode_rotation(m, "itodd", 11)
        decoded = sarr.decode_rotation(flat, "itodd", 11)
        np.testing.assert_allclose(decoded,
                                   sarr.canonic_rotation(m, "itodd", 11),
                                   atol=1e-9)

    def test_decode_accepts_lists_and_scales(self):
        flat = [0, 0.7, 0, 0.7, 0, 0.7]  # unnormalized identity prediction
        decoded = sarr.decode_rotation(flat, "tless", 11)
        np.testing.assert_allclose(decoded, np.eye(3), atol=1e-9)

    def test_encode_validates_input(self):
        with pytest.raises(ValueError):
            sarr.encode_rotation(np.eye(3) * 2, "tless", 11)

    def test_primitive_selector(self):
        out = sarr.canonic_rotation(euler_to_matrix(0, 0, deg(100)),
                                    "primitive", "CYLINDER")
        np.testing.assert_allclose(out, np.eye(3), atol=1e-9)

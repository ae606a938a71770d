import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sarr import metrics
from sarr.bop import PoseRecord
from sarr.metrics import (
    MISSING_ERROR_DEG,
    MissingVisibilityError,
    ar_c,
    evaluate,
    match_instances,
    recall_curve,
    rotation_error,
    solve_assignment,
)
from sarr.rotations import euler_to_matrix, random_rotations

deg = np.deg2rad


def brute_force_min_total(gt, pred):
    """Exhaustive minimum matching cost with 180-cost padding."""
    n = max(len(gt), len(pred))
    cost = np.full((n, n), MISSING_ERROR_DEG)
    for i, g in enumerate(gt):
        for j, p in enumerate(pred):
            cost[i, j] = rotation_error(p, g)
    return min(sum(cost[i, perm[i]] for i in range(n))
               for perm in itertools.permutations(range(n)))


class TestRotationError:
    def test_zero(self):
        assert rotation_error(np.eye(3), np.eye(3)) == 0.0

    def test_half_turn(self):
        np.testing.assert_allclose(
            rotation_error(euler_to_matrix(0, 0, math.pi), np.eye(3)), 180.0,
            atol=1e-9)

    def test_quarter_turn(self):
        np.testing.assert_allclose(
            rotation_error(euler_to_matrix(0, 0, math.pi / 2), np.eye(3)), 90.0,
            atol=1e-9)

    def test_symmetric_and_bounded(self, rng):
        ms = random_rotations(200, rng)
        e_ab = rotation_error(ms[:100], ms[100:])
        e_ba = rotation_error(ms[100:], ms[:100])
        np.testing.assert_allclose(e_ab, e_ba, atol=1e-9)
        assert np.all((0 <= e_ab) & (e_ab <= 180))

    def test_self_distance_zero(self, rng):
        ms = random_rotations(100, rng)
        np.testing.assert_allclose(rotation_error(ms, ms), 0.0, atol=1e-5)

    def test_half_turn_twin_scores_max_error(self, rng):
        # a pose spun half a turn about any fixed axis scores 180 against
        # itself: the ambiguity is punished unless resolved beforehand
        from sarr.codec import canonic_matrix
        from sarr.registry import lookup

        cls = lookup("tless", 11)
        half = euler_to_matrix(0, 0, math.pi)
        for m in random_rotations(25, rng):
            gt = canonic_matrix(m, cls)
            np.testing.assert_allclose(rotation_error(half @ gt, gt), 180.0,
                                       atol=1e-6)
            # the body-frame twin is visually identical; canonicalizing both
            # sides removes the penalty entirely
            twin = gt @ half
            assert rotation_error(twin, gt) > 179.0
            np.testing.assert_allclose(
                rotation_error(canonic_matrix(twin, cls), gt), 0.0, atol=1e-5)


class TestArC:
    def test_all_perfect(self):
        assert ar_c([0, 0, 0]) == 1.0

    def test_all_missed(self):
        assert ar_c([180.0]) == 0.0

    def test_hand_fixture(self):
        # per threshold: 1/5, 2/5, 3/5, 3/5, 4/5, 4/5 of {1,3,8,20,50}
        expected = (0.2 + 0.4 + 0.6 + 0.6 + 0.8 + 0.8) / 6
        assert abs(ar_c([1, 3, 8, 20, 50]) - expected) < 1e-12
        assert abs(expected - 0.5666666666666667) < 1e-12

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            ar_c([])

    def test_recalls_monotone(self, rng):
        errors = rng.uniform(0, 180, 50)
        curve = recall_curve(errors)
        values = [curve[t] for t in sorted(curve)]
        assert values == sorted(values)

    @given(st.lists(st.floats(0, 180), min_size=1, max_size=20))
    def test_adding_max_error_never_raises_score(self, errors):
        assert ar_c(errors + [180.0]) <= ar_c(errors) + 1e-12


class TestAssignment:
    def test_known_two_by_two(self):
        gt = [np.eye(3), euler_to_matrix(0, 0, deg(90))]
        pred = [euler_to_matrix(0, 0, deg(88)), euler_to_matrix(0, 0, deg(2))]
        result = match_instances(gt, pred)
        assert result.pairs == [(0, 1), (1, 0)]
        np.testing.assert_allclose(result.errors, [2.0, 2.0], atol=1e-9)
        assert result.missing == 0

    def test_missing_prediction(self):
        result = match_instances([np.eye(3)], [])
        assert result.pairs == []
        assert result.errors == [MISSING_ERROR_DEG]
        assert result.missing == 1

    def test_exact_match(self):
        result = match_instances([np.eye(3)], [np.eye(3)])
        assert result.errors == [0.0]

    def test_surplus_predictions_ignored(self):
        gt = [np.eye(3)]
        pred = [euler_to_matrix(0, 0, deg(3)), euler_to_matrix(0, 0, deg(170))]
        result = match_instances(gt, pred)
        assert result.pairs == [(0, 0)]
        np.testing.assert_allclose(result.errors, [3.0], atol=1e-9)

    def test_deterministic_tie_order(self):
        # identical predictions: lexicographically smallest pairing wins
        m = euler_to_matrix(0, 0, deg(5))
        result = match_instances([np.eye(3), np.eye(3)], [m, m.copy()])
        assert result.pairs == [(0, 0), (1, 1)]

    def test_optimal_vs_brute_force(self, rng):
        for _ in range(250):
            n_gt = int(rng.integers(1, 7))
            n_pred = int(rng.integers(0, 7))
            ms = random_rotations(n_gt + n_pred, rng)
            gt, pred = list(ms[:n_gt]), list(ms[n_gt:])
            result = match_instances(gt, pred)
            total = sum(result.errors) + max(0, n_pred - n_gt) * 0.0
            expected = brute_force_min_total(gt, pred)
            # surplus predictions pair with padded rows at 180 each
            expected -= max(0, n_pred - n_gt) * MISSING_ERROR_DEG
            assert abs(total - expected) < 1e-6

    def test_solver_rejects_rectangular(self):
        with pytest.raises(ValueError):
            solve_assignment(np.zeros((2, 3)))


def _gt(scene, image, obj, rotation, visib=None):
    return PoseRecord(scene, image, obj, rotation, [0, 0, 700], visib_fract=visib)


def _pred(scene, image, obj, rotation, score=1.0):
    return PoseRecord(scene, image, obj, rotation, [0, 0, 700], score=score,
                      time_s=0.05)


class TestEvaluate:
    def test_single_perfect_siso(self):
        gt = [_gt(1, 0, 21, np.eye(3), visib=0.9)]
        pred = [_pred(1, 0, 21, np.eye(3))]
        report = evaluate(gt, pred, "siso", "tless")
        assert report.ar_c == 1.0
        assert report.missing == 0

    def test_siso_requires_visibility(self):
        gt = [_gt(1, 0, 21, np.eye(3))]
        with pytest.raises(MissingVisibilityError):
            evaluate(gt, [], "siso", "tless")

    def test_siso_most_visible_instance(self):
        good = np.eye(3)
        off = euler_to_matrix(deg(30), 0, 0)
        gt = [_gt(1, 0, 21, off, visib=0.4), _gt(1, 0, 21, good, visib=0.9)]
        pred = [_pred(1, 0, 21, good)]
        report = evaluate(gt, pred, "siso", "tless")
        assert report.ar_c == 1.0  # scored against the most visible instance

    def test_siso_best_prediction_wins(self):
        gt = [_gt(1, 0, 21, np.eye(3), visib=0.9)]
        preds = [_pred(1, 0, 21, euler_to_matrix(0, 0, deg(30))),
                 _pred(1, 0, 21, np.eye(3))]
        report = evaluate(gt, preds, "siso", "tless")
        assert report.ar_c == 1.0

    def test_vivo_matching_report(self):
        gt = [_gt(1, 0, 21, np.eye(3)),
              _gt(1, 0, 21, euler_to_matrix(0, 0, deg(90)))]
        pred = [_pred(1, 0, 21, euler_to_matrix(0, 0, deg(88))),
                _pred(1, 0, 21, euler_to_matrix(0, 0, deg(2)))]
        report = evaluate(gt, pred, "vivo", "tless")
        assert report.recalls[2.0] == 1.0
        assert report.assignments["1/0/21"] == [(0, 1), (1, 0)]

    def test_vivo_missing_prediction_scores_max_error(self):
        gt = [_gt(1, 0, 21, np.eye(3)), _gt(1, 1, 21, np.eye(3))]
        pred = [_pred(1, 0, 21, np.eye(3))]
        report = evaluate(gt, pred, "vivo", "tless")
        assert report.missing == 1
        assert abs(report.ar_c - 0.5) < 1e-12

    def test_unmatched_prediction_counts_as_warning(self):
        gt = [_gt(1, 0, 21, np.eye(3))]
        pred = [_pred(1, 0, 21, np.eye(3)), _pred(1, 0, 99, np.eye(3))]
        report = evaluate(gt, pred, "vivo", "tless")
        assert report.warnings == 1
        assert report.ar_c == 1.0

    def test_gt_canonicalized_before_scoring(self):
        # class II object annotated past the symmetry boundary: a canonic
        # prediction scores perfectly even though the raw annotation differs
        gt = [_gt(1, 0, 11, euler_to_matrix(0, 0, deg(190)))]
        pred = [_pred(1, 0, 11, euler_to_matrix(0, 0, deg(10)))]
        report = evaluate(gt, pred, "vivo", "tless")
        assert report.ar_c == 1.0

    def test_predictions_not_canonicalized(self):
        # visually identical but non-canonic prediction is punished
        gt = [_gt(1, 0, 11, euler_to_matrix(0, 0, deg(10)))]
        pred = [_pred(1, 0, 11, euler_to_matrix(0, 0, deg(190)))]
        report = evaluate(gt, pred, "vivo", "tless")
        assert report.recalls[2.0] == 0.0

    def test_per_object_breakdown(self):
        gt = [_gt(1, 0, 21, np.eye(3)), _gt(1, 0, 22, np.eye(3))]
        pred = [_pred(1, 0, 21, np.eye(3)),
                _pred(1, 0, 22, euler_to_matrix(0, 0, deg(170)))]
        report = evaluate(gt, pred, "vivo", "tless")
        assert report.per_object[21]["ar_c"] == 1.0
        assert report.per_object[22]["ar_c"] == 0.0
        assert abs(report.ar_c - 0.5) < 1e-12

    def test_report_json_shape(self):
        import json
        gt = [_gt(1, 0, 21, np.eye(3))]
        report = evaluate(gt, [_pred(1, 0, 21, np.eye(3))], "vivo", "tless")
        payload = json.loads(report.to_json())
        assert set(payload) == {"task", "averaging", "thresholds_deg", "recalls",
                                "ar_c", "per_object", "missing", "warnings"}
        assert payload["averaging"] == "micro"

    def test_threads_env_gives_same_result(self, rng, monkeypatch):
        gt = [_gt(1, i, 21, m, visib=0.5)
              for i, m in enumerate(random_rotations(20, rng))]
        pred = [_pred(1, i, 21, m) for i, m in enumerate(random_rotations(20, rng))]
        serial = evaluate(gt, pred, "vivo", "tless")
        monkeypatch.setenv("SARR_THREADS", "4")
        threaded = evaluate(gt, pred, "vivo", "tless")
        assert serial.to_json() == threaded.to_json()

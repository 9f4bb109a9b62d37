import numpy as np
import pytest

from mire.metrics import rmse, tv_norm
from mire.simulate import NuGroundTruth, NuParams, simulate_nu


class TestSimulateNu:
    def test_zero_spreads_identity(self):
        clean = np.random.default_rng(0).random((10, 8))
        out, truth = simulate_nu(clean, NuParams(0.0, 0.0, 0.0, seed=1))
        np.testing.assert_array_equal(out, clean)
        np.testing.assert_array_equal(truth.gains, np.ones(8))
        np.testing.assert_array_equal(truth.offsets, np.zeros(8))

    def test_offsets_only_constant_per_column(self):
        clean = np.random.default_rng(1).random((12, 7))
        out, truth = simulate_nu(clean, NuParams(0.0, 0.1, 0.0, seed=42))
        residual = out - clean
        for y in range(7):
            column = residual[:, y]
            assert np.ptp(column) < 1e-15
            assert column[0] == pytest.approx(truth.offsets[y], abs=1e-15)

    def test_draw_order_reproducible(self):
        # same generator and draw order as documented: gains, offsets, noise
        clean = np.random.default_rng(2).random((6, 5))
        params = NuParams(0.05, 0.02, 0.01, seed=9)
        out, truth = simulate_nu(clean, params)
        rng = np.random.default_rng(9)
        gains = 1.0 + 0.05 * rng.standard_normal(5)
        offsets = 0.02 * rng.standard_normal(5)
        noise = 0.01 * rng.standard_normal((6, 5))
        np.testing.assert_array_equal(truth.gains, gains)
        np.testing.assert_array_equal(truth.offsets, offsets)
        np.testing.assert_array_equal(out, clean * gains + offsets + noise)

    def test_same_seed_same_output(self):
        clean = np.random.default_rng(3).random((9, 9))
        params = NuParams(seed=7)
        out1, _ = simulate_nu(clean, params)
        out2, _ = simulate_nu(clean, params)
        np.testing.assert_array_equal(out1, out2)

    def test_exact_inverse_recovers_clean(self):
        clean = np.random.default_rng(4).random((15, 10))
        out, truth = simulate_nu(clean, NuParams(0.05, 0.05, 0.0, seed=3))
        recovered = (out - truth.offsets[np.newaxis, :]) / truth.gains[np.newaxis, :]
        assert np.max(np.abs(recovered - clean)) < 1e-12

    def test_negative_std_rejected(self):
        with pytest.raises(ValueError):
            NuParams(gain_std=-0.1)

    def test_ground_truth_json_round_trip(self):
        truth = NuGroundTruth(gains=np.array([1.0, 1.1]),
                              offsets=np.array([0.0, -0.2]))
        back = NuGroundTruth.from_dict(truth.to_dict())
        np.testing.assert_array_equal(back.gains, truth.gains)
        np.testing.assert_array_equal(back.offsets, truth.offsets)


class TestRmse:
    def test_identical_is_zero(self):
        img = np.random.default_rng(5).random((6, 6))
        assert rmse(img, img) == 0.0

    def test_hand_computed(self):
        assert rmse(np.array([[0.0, 0.0]]), np.array([[3.0, 4.0]])) == \
            pytest.approx(np.sqrt(12.5))

    def test_symmetric(self):
        rng = np.random.default_rng(6)
        for _ in range(10):
            a, b = rng.random((2, 5, 4))
            assert rmse(a, b) == rmse(b, a)

    def test_triangle_inequality(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            a, b, c = rng.random((3, 6, 5))
            assert rmse(a, c) <= rmse(a, b) + rmse(b, c) + 1e-12

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            rmse(np.zeros((2, 2)), np.zeros((2, 3)))


class TestTvNorm:
    def test_constant_is_zero(self):
        assert tv_norm(np.full((7, 5), 0.4)) == 0.0

    def test_shift_invariant(self):
        img = np.random.default_rng(8).random((8, 8))
        assert tv_norm(img + 3.7) == pytest.approx(tv_norm(img), rel=1e-12)

    def test_hand_computed_2x2(self):
        # two horizontal steps of height 1, no vertical steps
        assert tv_norm(np.array([[0.0, 1.0], [0.0, 1.0]])) == 2.0

    def test_transpose_invariant(self):
        img = np.random.default_rng(9).random((6, 11))
        assert tv_norm(img.T) == pytest.approx(tv_norm(img), rel=1e-12)

    def test_positive_unless_constant(self):
        img = np.zeros((4, 4))
        img[2, 2] = 1.0
        assert tv_norm(img) > 0

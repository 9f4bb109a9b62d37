"""Shared test fixtures: deterministic synthetic landscapes and striped frames."""

import numpy as np
import pytest

from mire.histogram import gaussian_kernel


def smooth(img, sigma):
    """Separable Gaussian blur with reflected borders (test-image helper)."""
    weights = gaussian_kernel(sigma).weights
    r = len(weights) // 2

    def along_last_axis(a):
        padded = np.pad(a, ((0, 0), (r, r)), mode="reflect")
        return np.array([np.convolve(row, weights, mode="valid")
                         for row in padded])

    return along_last_axis(along_last_axis(img).T).T


def natural_image(height=144, width=256, seed=7):
    """Landscape-like test image: long-wavelength relief plus mild texture.

    Values stay in [0.1, 0.9] so simulated corruption rarely clips.  The
    relief wavelength is long compared to the smoothing windows under
    test, but its variations accumulate across the full width, which is
    the regime where rank-based equalization has something to gain over
    a per-column offset model.  A vertical ramp adds within-column
    contrast so gain errors are not invisible.
    """
    rng = np.random.default_rng(seed)
    relief = smooth(rng.standard_normal((height, width)), 20.0)
    texture = smooth(rng.standard_normal((height, width)), 1.5)
    rows = np.linspace(0.0, 1.0, height)[:, np.newaxis]
    img = 5.0 * relief + 0.3 * texture + 1.0 * rows
    img -= img.min()
    img /= img.max()
    return 0.1 + 0.8 * img


@pytest.fixture(scope="session")
def landscape():
    return natural_image()

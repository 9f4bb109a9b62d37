"""Column-wise linear non-uniformity simulator.

Corruption model: ``out(x, y) = clean(x, y) * g(y) + b(y) + eta(x, y)`` with
per-column gains g ~ Normal(1, gain_std^2), per-column offsets
b ~ Normal(0, offset_std^2), and per-pixel temporal noise
eta ~ Normal(0, noise_std^2). All draws come from numpy's seeded PCG64
generator in a fixed order (gains, offsets, noise), so a seed fully determines
the output on every platform.
"""

import dataclasses
import math

import numpy as np


@dataclasses.dataclass(frozen=True)
class NuParams:
    """Spread of the simulated non-uniformity and the generator seed."""

    gain_std: float = 0.05
    offset_std: float = 0.05
    noise_std: float = 0.01
    seed: int = 0

    def __post_init__(self):
        for name in ("gain_std", "offset_std", "noise_std"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise ValueError(f"{name} must be finite and >= 0, got {value}")


@dataclasses.dataclass
class NuGroundTruth:
    """The drawn per-column gains and offsets, one entry per image column."""

    gains: np.ndarray
    offsets: np.ndarray

    def to_dict(self):
        return {"gains": self.gains.tolist(), "offsets": self.offsets.tolist()}

    @classmethod
    def from_dict(cls, d):
        return cls(gains=np.asarray(d["gains"], dtype=np.float64),
                   offsets=np.asarray(d["offsets"], dtype=np.float64))


def simulate_nu(clean, params):
    """Corrupt a clean image with seeded column-wise gains, offsets and noise.

    Parameters
    ----------
    clean : ndarray
        2-D image.
    params : NuParams

    Returns
    -------
    (ndarray, NuGroundTruth)
        The corrupted image and the gains/offsets that produced it. With all
        spreads zero the output equals the input exactly.
    """
    clean = np.asarray(clean, dtype=np.float64)
    if clean.ndim != 2 or clean.size == 0:
        raise ValueError("clean image must be a non-empty 2-D array")
    height, width = clean.shape
    rng = np.random.default_rng(params.seed)
    gains = 1.0 + params.gain_std * rng.standard_normal(width)
    offsets = params.offset_std * rng.standard_normal(width)
    noise = params.noise_std * rng.standard_normal((height, width))
    corrupted = clean * gains[np.newaxis, :] + offsets[np.newaxis, :] + noise
    return corrupted, NuGroundTruth(gains=gains, offsets=offsets)

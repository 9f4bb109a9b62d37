"""Discrete quantile functions and weighted midway histogram specification.

A column of M samples is represented by its exact order statistics: the
ascending sorted values (the discrete inverse cumulative histogram) together
with the permutation mapping sorted position back to row index. Because every
column of an image has the same length, the midway of several columns is just
the weighted rank-wise average of their sorted values, and specification is a
rank substitution. No binning is involved.
"""

import math
from typing import NamedTuple

import numpy as np


class QuantileFunction(NamedTuple):
    """Sorted column values plus the rank-to-row bijection.

    ``values`` is non-decreasing; ``column[ranks[k]] == values[k]``. Ties are
    broken by ascending row index (stable sort), so the representation is
    deterministic.
    """

    values: np.ndarray
    ranks: np.ndarray


class WeightKernel(NamedTuple):
    """Truncated, normalized Gaussian weights over column offsets -N..N."""

    sigma: float
    radius: int
    weights: np.ndarray


def quantile_function(column):
    """Compute the exact quantile function of one column.

    Parameters
    ----------
    column : array_like
        1-D array of finite values, length >= 1.

    Returns
    -------
    QuantileFunction
    """
    column = np.asarray(column, dtype=np.float64)
    if column.ndim != 1 or column.size == 0:
        raise ValueError("column must be a non-empty 1-D array")
    if not np.all(np.isfinite(column)):
        raise ValueError("column values must be finite")
    ranks = np.argsort(column, kind="stable")
    return QuantileFunction(values=column[ranks], ranks=ranks)


def gaussian_kernel(sigma):
    """Build the normalized Gaussian weight kernel for a given std-dev.

    The kernel is truncated at radius ``max(1, ceil(4 * sigma))`` (discarded
    mass below 1e-4) and renormalized to sum to 1. ``sigma = 0`` degenerates
    to the identity kernel ``[1]``.
    """
    if not (isinstance(sigma, (int, float)) and math.isfinite(sigma)):
        raise ValueError(f"sigma must be a finite number, got {sigma!r}")
    if sigma < 0:
        raise ValueError(f"sigma must be >= 0, got {sigma}")
    if sigma == 0:
        return WeightKernel(sigma=0.0, radius=0, weights=np.array([1.0]))
    radius = max(1, math.ceil(4.0 * sigma))
    offsets = np.arange(-radius, radius + 1, dtype=np.float64)
    weights = np.exp(-(offsets**2) / (2.0 * sigma**2))
    weights /= weights.sum()
    return WeightKernel(sigma=float(sigma), radius=radius, weights=weights)


def midway_quantiles(qfs, kernel):
    """Weighted average of quantile functions, rank by rank.

    Parameters
    ----------
    qfs : sequence of QuantileFunction
        One per kernel tap, all of the same length.
    kernel : WeightKernel

    Returns
    -------
    ndarray
        Non-decreasing array of the same length as each input; entry ``k`` is
        the convex combination of the inputs' ``values[k]``.
    """
    weights = kernel.weights
    if len(qfs) != len(weights):
        raise ValueError(
            f"{len(qfs)} quantile functions for a {len(weights)}-tap kernel")
    lengths = {len(qf.values) for qf in qfs}
    if len(lengths) != 1:
        raise ValueError(f"quantile functions differ in length: {sorted(lengths)}")
    stacked = np.stack([qf.values for qf in qfs])
    return weights @ stacked


def specify(column, target):
    """Give a column the prescribed sorted values via a monotone remapping.

    Each sample is replaced by the target value at its rank, ties resolved by
    row order, so within-column ordering is preserved (the old-to-new value
    map is monotone non-decreasing).

    Parameters
    ----------
    column : array_like
        1-D array of finite values.
    target : array_like
        Non-decreasing array of the same length; the desired order statistics.
    """
    column = np.asarray(column, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    if column.shape != target.shape or column.ndim != 1:
        raise ValueError(
            f"column and target must be 1-D of equal length, "
            f"got {column.shape} and {target.shape}")
    if np.any(np.diff(target) < 0):
        raise ValueError("target values must be non-decreasing")
    ranks = np.argsort(column, kind="stable")
    out = np.empty_like(target)
    out[ranks] = target
    return out

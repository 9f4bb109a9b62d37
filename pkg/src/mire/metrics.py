"""Evaluation metrics: root-mean-square error and the total-variation norm."""

import numpy as np


def rmse(a, b):
    """Root mean squared difference between two equally sized images."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.sqrt(np.mean((a - b) ** 2)))


def tv_norm(img):
    """Isotropic discrete total variation.

    Sum over pixels of ``sqrt(dx^2 + dy^2)`` with forward differences down
    rows and across columns; the differences are zero at the last row/column.
    Invariant under global additive shift and under transposition.
    """
    img = np.asarray(img, dtype=np.float64)
    if img.ndim != 2:
        raise ValueError("image must be 2-D")
    dx = np.zeros_like(img)
    dy = np.zeros_like(img)
    dx[:-1, :] = img[1:, :] - img[:-1, :]
    dy[:, :-1] = img[:, 1:] - img[:, :-1]
    return float(np.sum(np.sqrt(dx * dx + dy * dy)))

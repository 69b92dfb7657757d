"""Shared types and helpers: series validation, z-normalization, distances."""
from dataclasses import dataclass, field

import numpy as np

from . import kernels


class InfeasibleAlignmentError(ValueError):
    """No chain of legal transitions connects (1, 1) to (L_P, L_Q)."""


def as_series(x, name="series"):
    """Return ``x`` as a read-only float64 ``(L, d)`` array.

    1-D input is treated as a univariate series of shape ``(L, 1)``.
    """
    arr = np.array(x, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 1-D or 2-D, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or Inf")
    arr.setflags(write=False)
    return arr


def z_normalize(series):
    """Per-channel z-normalization with the population standard deviation.

    Constant channels become all zeros.
    """
    x = as_series(series)
    span = np.ptp(x, axis=0)
    const = span == 0
    # dividing by the range first keeps tiny (subnormal) channels finite
    y = (x - x.mean(axis=0)) / np.where(const, 1.0, span)
    std = y.std(axis=0)
    out = np.where(const, 0.0, y / np.where(const, 1.0, std))
    out.setflags(write=False)
    return out


def pairwise_distances(P, Q, metric="euclidean_rows"):
    """Pointwise distance matrix between the samples of ``P`` and ``Q``.

    ``abs_univariate`` requires single-channel input and gives ``|p_i - q_j|``;
    ``euclidean_rows`` gives the l2 distance between row vectors (which equals
    the absolute difference for one channel).
    """
    P = as_series(P, "P")
    Q = as_series(Q, "Q")
    if P.shape[1] != Q.shape[1]:
        raise ValueError(f"channel count mismatch: {P.shape[1]} vs {Q.shape[1]}")
    if metric == "abs_univariate":
        if P.shape[1] != 1:
            raise ValueError("abs_univariate metric needs univariate series")
    elif metric != "euclidean_rows":
        raise ValueError(f"unknown metric {metric!r}")
    return kernels.pairwise_rows(P, Q)


@dataclass(frozen=True)
class AlignmentResult:
    """Warping path (0-based ``(i, j)`` rows) plus accumulated cost."""

    path: np.ndarray
    distance: float
    normalized_distance: float | None = None
    config: dict = field(default_factory=dict)

    @property
    def path_1based(self):
        return self.path + 1


def validate_path(path, n, m, continuous=True):
    """Raise ``ValueError`` unless ``path`` is a legal warping path on an n x m grid."""
    path = np.asarray(path)
    if path.ndim != 2 or path.shape[1] != 2 or len(path) == 0:
        raise ValueError("path must be a non-empty (l, 2) array")
    if tuple(path[0]) != (0, 0) or tuple(path[-1]) != (n - 1, m - 1):
        raise ValueError("path violates the boundary condition")
    steps = np.diff(path, axis=0)
    if np.any(steps < 0) or np.any(steps.sum(axis=1) == 0):
        raise ValueError("path is not strictly monotone")
    if continuous and np.any(steps > 1):
        raise ValueError("path is not continuous")
    return path

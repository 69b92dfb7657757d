"""Alignment quality: Mean Absolute Deviation between two warping paths."""
from dataclasses import dataclass, asdict

import numpy as np


@dataclass(frozen=True)
class PathDeviation:
    area: int
    mad: float
    reference_length: int
    delay_seconds: float | None = None

    def to_dict(self):
        d = asdict(self)
        if d["delay_seconds"] is None:
            del d["delay_seconds"]
        return d


def row_envelopes(path, n_rows):
    """Per-row ``(lo, hi)`` column range covered by ``path``.

    Rows the path skips get the linearly interpolated column between the
    last cell of the previous visited row and the first cell of the next
    one, widened to the enclosing integer cells.
    """
    path = np.asarray(path, dtype=np.int64)
    lo = np.full(n_rows, -1, dtype=np.int64)
    hi = np.full(n_rows, -1, dtype=np.int64)
    for i, j in path:
        if lo[i] < 0 or j < lo[i]:
            lo[i] = j
        if j > hi[i]:
            hi[i] = j
    visited = np.flatnonzero(lo >= 0)
    for a, b in zip(visited[:-1], visited[1:]):
        if b - a > 1:
            rows = np.arange(a + 1, b)
            c = hi[a] + (lo[b] - hi[a]) * (rows - a) / (b - a)
            lo[rows] = np.floor(c).astype(np.int64)
            hi[rows] = np.ceil(c).astype(np.int64)
    return lo, hi


def path_area(path_a, path_b):
    """Number of grid cells strictly between two paths (path cells excluded)."""
    a = np.asarray(path_a, dtype=np.int64)
    b = np.asarray(path_b, dtype=np.int64)
    if a.ndim != 2 or b.ndim != 2 or len(a) == 0 or len(b) == 0:
        raise ValueError("paths must be non-empty (l, 2) arrays")
    if tuple(a[0]) != (0, 0) or tuple(b[0]) != (0, 0):
        raise ValueError("paths must start at the first cell")
    if tuple(a[-1]) != tuple(b[-1]):
        raise ValueError(f"paths end on different cells: {tuple(a[-1])} vs {tuple(b[-1])}")
    n_rows = int(a[-1, 0]) + 1
    lo_a, hi_a = row_envelopes(a, n_rows)
    lo_b, hi_b = row_envelopes(b, n_rows)
    gap = np.maximum(lo_b - hi_a - 1, lo_a - hi_b - 1)
    return int(np.maximum(gap, 0).sum())


def mean_absolute_deviation(path_a, path_b, reference_length=None, sample_rate=None):
    """Area between the paths divided by the reference length.

    Paths are ``(reference_index, target_index)`` rows, 0-based. The
    reference length defaults to the number of grid rows. With
    ``sample_rate`` the mean delay in seconds is reported as well.
    """
    area = path_area(path_a, path_b)
    if reference_length is None:
        reference_length = int(np.asarray(path_a)[-1, 0]) + 1
    if reference_length <= 0:
        raise ValueError("reference length must be positive")
    mad = area / reference_length
    delay = None if sample_rate is None else mad / sample_rate
    return PathDeviation(area, mad, int(reference_length), delay)

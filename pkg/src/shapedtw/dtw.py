"""DTW alignment under a step pattern, plus the dDTW and wDTW baselines.

No warping window is applied: the full ``L_P x L_Q`` grid is searched.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import AlignmentResult, InfeasibleAlignmentError, as_series, pairwise_distances
from .descriptors import derivative_transform
from .steps import get_step_pattern


def accumulate(dist, pattern="symmetric1"):
    """Run the DP over a precomputed local-cost matrix.

    Returns ``(D, choice)``: accumulated costs and the index of the winning
    transition per cell.
    """
    pat = get_step_pattern(pattern)
    dist = np.asarray(dist, dtype=np.float64)
    if dist.ndim != 2 or dist.size == 0:
        raise ValueError("cost matrix must be a non-empty 2-D array")
    return kernels.dp_fill(dist, *pat.compiled)


def backtrack(choice, pattern):
    pat = get_step_pattern(pattern)
    moves = pat.compiled[0]
    i, j = choice.shape[0] - 1, choice.shape[1] - 1
    rev = [(i, j)]
    while (i, j) != (0, 0):
        t = choice[i, j]
        if t < 0:
            raise InfeasibleAlignmentError(f"no legal predecessor at cell ({i}, {j})")
        for oi, oj in reversed(pat.path_cells(t)):
            rev.append((i - oi, j - oj))
        i -= int(moves[t, 0])
        j -= int(moves[t, 1])
        rev.append((i, j))
    return np.array(rev[::-1], dtype=np.int64)


def align_cost_matrix(dist, pattern="symmetric1", config=None):
    """Optimal alignment over a local-cost matrix, with backtracked path."""
    pat = get_step_pattern(pattern)
    D, choice = accumulate(dist, pat)
    n, m = D.shape
    total = D[-1, -1]
    if not np.isfinite(total):
        raise InfeasibleAlignmentError(
            f"step pattern {pat.name} admits no path on a {n} x {m} grid"
        )
    path = backtrack(choice, pat)
    norm = pat.normalizer(n, m)
    cfg = {"step_pattern": pat.name}
    cfg.update(config or {})
    return AlignmentResult(
        path=path,
        distance=float(total),
        normalized_distance=None if norm is None else float(total) / norm,
        config=cfg,
    )


def cost_matrix_distance(dist, pattern="symmetric1"):
    """Accumulated cost only; ``inf`` when no path exists."""
    D, _ = accumulate(dist, pattern)
    return float(D[-1, -1])


def dtw_align(P, Q, pattern="symmetric1"):
    P = as_series(P, "P")
    Q = as_series(Q, "Q")
    dist = pairwise_distances(P, Q, "euclidean_rows")
    return align_cost_matrix(dist, pattern, {"method": "dtw"})


def ddtw_align(P, Q, pattern="symmetric1"):
    """DTW between the derivative sequences of ``P`` and ``Q``.

    Path indices refer to the original samples (the derivative keeps length).
    """
    P = as_series(P, "P")
    Q = as_series(Q, "Q")
    if len(P) < 3 or len(Q) < 3:
        raise ValueError("dDTW needs series of length >= 3")
    dist = pairwise_distances(derivative_transform(P), derivative_transform(Q), "euclidean_rows")
    return align_cost_matrix(dist, pattern, {"method": "ddtw"})


@dataclass(frozen=True)
class WdtwConfig:
    g: float = 0.1
    w_max: float = 1.0

    def __post_init__(self):
        if not self.g >= 0:
            raise ValueError(f"g must be >= 0, got {self.g}")
        if not self.w_max > 0:
            raise ValueError(f"w_max must be > 0, got {self.w_max}")


def wdtw_weights(n, m, cfg=WdtwConfig()):
    """Logistic phase-difference weights ``w(|i - j|)`` on an n x m grid."""
    mid = -(-max(n, m) // 2)
    gap = np.abs(np.arange(n)[:, None] - np.arange(m)[None, :])
    return cfg.w_max / (1.0 + np.exp(-cfg.g * (gap - mid)))


def wdtw_align(P, Q, cfg=WdtwConfig(), pattern="symmetric1"):
    P = as_series(P, "P")
    Q = as_series(Q, "Q")
    if P.shape[1] != 1 or Q.shape[1] != 1:
        raise ValueError("wDTW is defined for univariate series")
    dist = pairwise_distances(P, Q, "abs_univariate") * wdtw_weights(len(P), len(Q), cfg)
    return align_cost_matrix(dist, pattern, {"method": "wdtw", "g": cfg.g, "w_max": cfg.w_max})

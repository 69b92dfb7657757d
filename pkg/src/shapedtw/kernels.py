"""Hot loops: pairwise row distances and the step-pattern DP fill.

Every kernel has two implementations with identical floating-point
operation order:

* a numba ``@njit`` loop kernel (used when numba is importable and not
  disabled through ``SHAPEDTW_DISABLE_NUMBA``), and
* a pure-numpy kernel (row distances accumulate channel by channel; the DP
  sweeps anti-diagonals, which is legal because every transition moves at
  least one step in i + j).

``USE_NUMBA`` is read at call time, so tests and benchmarks may flip it.
"""
import numpy as np

from ._accel import HAVE_NUMBA, njit

USE_NUMBA = HAVE_NUMBA

INF = np.inf


# --------------------------------------------------------------------------
# pairwise distances


@njit(cache=True, nogil=True)
def _pairwise_rows_jit(A, B):
    n, m = A.shape
    k = B.shape[0]
    out = np.empty((n, k))
    if m == 1:
        for i in range(n):
            a = A[i, 0]
            for j in range(k):
                out[i, j] = abs(a - B[j, 0])
        return out
    for i in range(n):
        for j in range(k):
            acc = 0.0
            for c in range(m):
                diff = A[i, c] - B[j, c]
                acc += diff * diff
            out[i, j] = np.sqrt(acc)
    return out


def _pairwise_rows_numpy(A, B):
    if A.shape[1] == 1:
        return np.abs(A[:, 0][:, None] - B[:, 0][None, :])
    acc = np.zeros((A.shape[0], B.shape[0]))
    for c in range(A.shape[1]):
        diff = A[:, c][:, None] - B[:, c][None, :]
        acc += diff * diff
    return np.sqrt(acc)


def pairwise_rows(A, B):
    """Row-wise l2 distances between ``A`` (n, m) and ``B`` (k, m).

    With a single column this is ``|a - b|`` computed directly, so the
    univariate path is bit-identical to the absolute-difference metric.
    """
    A = np.ascontiguousarray(A, dtype=np.float64)
    B = np.ascontiguousarray(B, dtype=np.float64)
    if USE_NUMBA:
        return _pairwise_rows_jit(A, B)
    return _pairwise_rows_numpy(A, B)


# --------------------------------------------------------------------------
# DP fill
#
# A step pattern is compiled to:
#   moves       (T, 2) int64   predecessor offset (di, dj) of each transition,
#                              in tie-break priority order
#   cell_start  (T + 1,) int64 slice of the cell arrays owned by transition t
#   cell_off    (C, 2) int64   offset of a charged cell from the landing cell
#   cell_w      (C,) float64   multiplicative weight of that cell
# The accumulated value of transition t landing on (i, j) is
#   D[i - di, j - dj] + sum_c w_c * dist[i - oi_c, j - oj_c]
# summed left to right. The first strictly smaller candidate wins.


@njit(cache=True, nogil=True)
def _dp_fill_jit(dist, moves, cell_start, cell_off, cell_w):
    n, k = dist.shape
    T = moves.shape[0]
    D = np.full((n, k), np.inf)
    choice = np.full((n, k), -1, dtype=np.int8)
    D[0, 0] = dist[0, 0]
    for i in range(n):
        for j in range(k):
            if i == 0 and j == 0:
                continue
            best = np.inf
            bt = -1
            for t in range(T):
                pi = i - moves[t, 0]
                pj = j - moves[t, 1]
                if pi < 0 or pj < 0:
                    continue
                acc = D[pi, pj]
                if acc == np.inf:
                    continue
                for c in range(cell_start[t], cell_start[t + 1]):
                    acc += cell_w[c] * dist[i - cell_off[c, 0], j - cell_off[c, 1]]
                if acc < best:
                    best = acc
                    bt = t
            D[i, j] = best
            choice[i, j] = bt
    return D, choice


def _dp_fill_numpy(dist, moves, cell_start, cell_off, cell_w):
    n, k = dist.shape
    D = np.full((n, k), np.inf)
    choice = np.full((n, k), -1, dtype=np.int8)
    D[0, 0] = dist[0, 0]
    for s in range(1, n + k - 1):
        i = np.arange(max(0, s - k + 1), min(n - 1, s) + 1)
        j = s - i
        best = np.full(i.shape, np.inf)
        bt = np.full(i.shape, -1, dtype=np.int8)
        for t in range(moves.shape[0]):
            pi = i - moves[t, 0]
            pj = j - moves[t, 1]
            ok = (pi >= 0) & (pj >= 0)
            if not ok.any():
                continue
            ii, jj = i[ok], j[ok]
            acc = D[pi[ok], pj[ok]]
            for c in range(cell_start[t], cell_start[t + 1]):
                acc = acc + cell_w[c] * dist[ii - cell_off[c, 0], jj - cell_off[c, 1]]
            sub_best = best[ok]
            better = acc < sub_best
            sub_best[better] = acc[better]
            best[ok] = sub_best
            sub_bt = bt[ok]
            sub_bt[better] = t
            bt[ok] = sub_bt
        D[i, j] = best
        choice[i, j] = bt
    return D, choice


def dp_fill(dist, moves, cell_start, cell_off, cell_w):
    """Fill the accumulated-cost matrix and the per-cell chosen transition.

    Unreachable cells hold ``inf`` and choice ``-1``; the origin holds
    ``dist[0, 0]`` and choice ``-1``.
    """
    dist = np.ascontiguousarray(dist, dtype=np.float64)
    if USE_NUMBA:
        return _dp_fill_jit(dist, moves, cell_start, cell_off, cell_w)
    return _dp_fill_numpy(dist, moves, cell_start, cell_off, cell_w)

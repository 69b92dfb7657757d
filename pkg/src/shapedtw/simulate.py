"""Simulated alignment pairs: smooth random scaling followed by stretching.

The ground truth is exact because the warped series is built by duplicating
samples of the scaled original.
"""
import math
from dataclasses import dataclass

import numpy as np

from .core import as_series


@dataclass(frozen=True)
class SimConfig:
    a: float = 0.5
    b: float = 1.0
    smoothing: int = 5
    # fraction of points to stretch; 0.15 gives ~30% length growth with taus {1,2,3}
    stretch: float = 0.15
    taus: tuple = (1, 2, 3)

    def __post_init__(self):
        if not 0 < self.a <= self.b:
            raise ValueError(f"scale range needs 0 < a <= b, got [{self.a}, {self.b}]")
        if self.smoothing < 0:
            raise ValueError("smoothing iterations must be >= 0")
        if not 0 <= self.stretch <= 1:
            raise ValueError("stretch fraction must lie in [0, 1]")
        if len(self.taus) == 0:
            raise ValueError("tau set is empty")
        if any(int(t) != t or t < 1 for t in self.taus):
            raise ValueError(f"tau values must be positive integers, got {self.taus}")


@dataclass(frozen=True)
class SimulatedPair:
    original: np.ndarray  # (L,)
    warped: np.ndarray  # (L + sum(taus),)
    truth: np.ndarray  # (len(warped), 2) rows of (warped index, original index)
    scale_vector: np.ndarray  # (L,)

    @property
    def truth_by_original(self):
        """Ground truth as ``(original index, warped index)`` rows."""
        return self.truth[:, ::-1].copy()


def initial_scale_walk(L, rng):
    """Random walk whose adjacent steps differ by at most 1."""
    s = np.empty(L)
    s[0] = rng.standard_normal()
    if L > 1:
        s[1:] = s[0] + np.cumsum(np.sin(np.pi * rng.standard_normal(L - 1)))
    return s


def simulate_scale_vector(L, cfg=SimConfig(), rng=None):
    rng = np.random.default_rng(rng)
    if L < 1:
        raise ValueError("length must be >= 1")
    s = initial_scale_walk(L, rng)
    for _ in range(cfg.smoothing):
        s = np.sin(np.cumsum(s))
    lo, hi = s.min(), s.max()
    if hi == lo:
        return np.full(L, (cfg.a + cfg.b) / 2.0)
    out = (s - lo) / (hi - lo) * (cfg.b - cfg.a) + cfg.a
    return np.clip(out, cfg.a, cfg.b)


def stretch_series(x, positions, taus):
    """Insert ``taus[k]`` extra copies after sample ``positions[k]``.

    Returns the stretched series and the ``(warped, original)`` truth path.
    """
    x = np.asarray(x, dtype=np.float64)
    reps = np.ones(len(x), dtype=np.int64)
    positions = np.asarray(positions, dtype=np.int64)
    if len(np.unique(positions)) != len(positions):
        raise ValueError("stretch positions must be distinct")
    reps[positions] += np.asarray(taus, dtype=np.int64)
    src = np.repeat(np.arange(len(x)), reps)
    truth = np.column_stack([np.arange(len(src)), src])
    return x[src], truth


def n_stretched(L, fraction):
    # round first so that e.g. 0.15 * 100 does not ceil to 16
    return min(L, math.ceil(round(fraction * L, 9)))


def simulate_pair(T, cfg=SimConfig(), rng=None):
    """Scale ``T`` by a smooth random vector, then stretch random points."""
    rng = np.random.default_rng(rng)
    t = as_series(T, "T")
    if t.shape[1] != 1:
        raise ValueError("simulation is defined for univariate series")
    t = t[:, 0]
    L = len(t)
    if L < 2:
        raise ValueError("series must have at least 2 points")
    scale = simulate_scale_vector(L, cfg, rng)
    scaled = t * scale
    k = n_stretched(L, cfg.stretch)
    positions = np.sort(rng.choice(L, size=k, replace=False))
    taus = rng.choice(np.asarray(cfg.taus, dtype=np.int64), size=k)
    warped, truth = stretch_series(scaled, positions, taus)
    return SimulatedPair(t.copy(), warped, truth, scale)

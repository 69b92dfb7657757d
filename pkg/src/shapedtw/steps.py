"""Step patterns for the DTW recursion.

A transition ``(di, dj, cells)`` lands on ``(i, j)`` from ``(i - di, j - dj)``
and charges ``w * d(i - oi, j - oj)`` for every ``(oi, oj, w)`` in ``cells``.
Transitions are listed in tie-break priority order: diagonal first, then
moves that advance further along the second series, then the rest.
"""
from dataclasses import dataclass
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class Transition:
    di: int
    dj: int
    cells: tuple  # ((oi, oj, weight), ...) in summation order

    def __post_init__(self):
        if self.di < 0 or self.dj < 0 or self.di + self.dj < 1:
            raise ValueError(f"illegal transition step ({self.di}, {self.dj})")
        for oi, oj, _ in self.cells:
            if not (0 <= oi <= self.di and 0 <= oj <= self.dj) or (oi, oj) == (self.di, self.dj):
                raise ValueError(f"cell offset ({oi}, {oj}) outside transition ({self.di}, {self.dj})")


@dataclass(frozen=True)
class StepPattern:
    name: str
    transitions: tuple
    # "N" -> divide by len(P), "N+M" -> by len(P) + len(Q), None -> no normalization
    normalization: str | None = None

    @cached_property
    def compiled(self):
        moves = np.array([(t.di, t.dj) for t in self.transitions], dtype=np.int64)
        start = [0]
        offs, weights = [], []
        for t in self.transitions:
            for oi, oj, w in t.cells:
                offs.append((oi, oj))
                weights.append(float(w))
            start.append(len(offs))
        return (
            moves,
            np.array(start, dtype=np.int64),
            np.array(offs, dtype=np.int64).reshape(-1, 2),
            np.array(weights, dtype=np.float64),
        )

    @property
    def is_continuous(self):
        """True when every path step is one of (1,0), (1,1), (0,1)."""
        return all(t.di <= 1 and t.dj <= 1 for t in self.transitions)

    def normalizer(self, n, m):
        if self.normalization == "N":
            return float(n)
        if self.normalization == "N+M":
            return float(n + m)
        return None

    def path_cells(self, t):
        """Cells visited strictly between predecessor and landing cell, in path order."""
        tr = self.transitions[t]
        inner = {(oi, oj) for oi, oj, _ in tr.cells if (oi, oj) != (0, 0)}
        return sorted(inner, reverse=True)


def _t(di, dj, *cells):
    return Transition(di, dj, tuple(cells))


_PATTERNS = {
    "symmetric1": StepPattern(
        "symmetric1",
        (_t(1, 1, (0, 0, 1)), _t(0, 1, (0, 0, 1)), _t(1, 0, (0, 0, 1))),
    ),
    "symmetric2": StepPattern(
        "symmetric2",
        (_t(1, 1, (0, 0, 2)), _t(0, 1, (0, 0, 1)), _t(1, 0, (0, 0, 1))),
        "N+M",
    ),
    # Sakoe-Chiba symmetric, slope constraint P = 1
    "symmetric5": StepPattern(
        "symmetric5",
        (
            _t(1, 1, (0, 0, 2)),
            _t(1, 2, (0, 1, 1), (0, 0, 1)),
            _t(2, 1, (1, 0, 1), (0, 0, 1)),
        ),
        "N+M",
    ),
    "asymmetric": StepPattern(
        "asymmetric",
        (_t(1, 1, (0, 0, 1)), _t(1, 2, (0, 0, 1)), _t(1, 0, (0, 0, 1))),
        "N",
    ),
    "rabinerJuang": StepPattern(
        "rabinerJuang",
        (_t(1, 1, (0, 0, 1)), _t(1, 2, (0, 0, 1)), _t(2, 1, (0, 0, 1))),
    ),
}


def step_pattern_table():
    """The five named step patterns, symmetric1 first."""
    return list(_PATTERNS.values())


def get_step_pattern(pattern):
    """Look up a pattern by name; ``StepPattern`` instances pass through."""
    if isinstance(pattern, StepPattern):
        return pattern
    try:
        return _PATTERNS[pattern]
    except KeyError:
        raise KeyError(
            f"unknown step pattern {pattern!r}; expected one of {sorted(_PATTERNS)}"
        ) from None

"""1-NN classification under DTW-family distances.

Series are z-normalized first; shapeDTW descriptors are computed once per
series from the normalized values. Nearest-neighbour ties go to the lowest
training index.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict

import numpy as np

from .core import as_series, pairwise_distances, z_normalize
from .descriptors import derivative_transform
from .dtw import WdtwConfig, cost_matrix_distance, wdtw_weights
from .pipeline import encode_series

METHODS = ("dtw", "ddtw", "wdtw", "shapedtw")


@dataclass
class LabeledDataset:
    labels: np.ndarray
    series: list
    name: str = ""
    split: str = ""

    def __post_init__(self):
        self.labels = np.asarray(self.labels, dtype=np.int64)
        if len(self.labels) != len(self.series):
            raise ValueError("labels and series differ in length")

    def __len__(self):
        return len(self.series)


@dataclass(frozen=True)
class DistanceConfig:
    method: str = "dtw"
    descriptor: str = "raw"
    subseq_len: int = 30
    pattern: str = "symmetric1"
    g: float = 0.1
    znorm: bool = True
    # "abs": |p - q| (row l2 for descriptors); "squared": its square
    local_cost: str = "abs"

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.local_cost not in ("abs", "squared"):
            raise ValueError(f"unknown local cost {self.local_cost!r}")

    @property
    def label(self):
        sq = "^2" if self.local_cost == "squared" else ""
        if self.method == "shapedtw":
            return f"shapedtw[{self.descriptor},l={self.subseq_len}]{sq}"
        return self.method + sq

    def to_dict(self):
        d = asdict(self)
        if self.method != "shapedtw":
            d.pop("descriptor")
            d.pop("subseq_len")
        if self.method != "wdtw":
            d.pop("g")
        return d

    def prepare(self, series):
        """Per-series representation fed to :meth:`distance`."""
        x = as_series(series)
        if self.znorm:
            x = z_normalize(x)
        if self.method == "ddtw":
            return derivative_transform(x)
        if self.method == "shapedtw":
            return encode_series(x, self.descriptor, self.subseq_len).desc
        return x

    def distance(self, a, b):
        dist = pairwise_distances(a, b, "euclidean_rows")
        if self.local_cost == "squared":
            dist = dist * dist
        if self.method == "wdtw":
            dist = dist * wdtw_weights(len(a), len(b), WdtwConfig(g=self.g))
        return cost_matrix_distance(dist, self.pattern)


@dataclass
class EvalReport:
    dataset: str
    method: dict
    error_rate: float
    n_errors: int
    n_test: int
    predictions: list = field(default_factory=list)
    nearest: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def cross_distances(queries, refs, cfg, jobs=1):
    """Distance matrix between prepared query and reference representations.

    Rows are computed as independent work items; results are stored by row
    index so the output does not depend on completion order.
    """
    out = np.empty((len(queries), len(refs)))

    def row(i):
        q = queries[i]
        out[i] = [cfg.distance(q, r) for r in refs]

    if jobs is None or jobs <= 1:
        for i in range(len(queries)):
            row(i)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            list(pool.map(row, range(len(queries))))
    return out


def nn_classify(train, query, cfg=DistanceConfig()):
    if len(train) == 0:
        raise ValueError("training set is empty")
    q = cfg.prepare(query)
    d = [cfg.distance(q, cfg.prepare(s)) for s in train.series]
    return int(train.labels[int(np.argmin(d))])


def evaluate_dataset(train, test, cfg=DistanceConfig(), jobs=1):
    if len(train) == 0:
        raise ValueError("training set is empty")
    refs = [cfg.prepare(s) for s in train.series]
    queries = [cfg.prepare(s) for s in test.series]
    dmat = cross_distances(queries, refs, cfg, jobs)
    nearest = np.argmin(dmat, axis=1)
    pred = train.labels[nearest]
    n_err = int(np.sum(pred != test.labels))
    return EvalReport(
        dataset=test.name or train.name,
        method=cfg.to_dict(),
        error_rate=n_err / len(test),
        n_errors=n_err,
        n_test=len(test),
        predictions=[int(p) for p in pred],
        nearest=[int(k) for k in nearest],
    )


def loocv_accuracy(train, cfg=DistanceConfig(), jobs=1):
    """Leave-one-out 1-NN accuracy on the training set."""
    if len(train) < 2:
        raise ValueError("leave-one-out needs at least 2 instances")
    reps = [cfg.prepare(s) for s in train.series]
    dmat = cross_distances(reps, reps, cfg, jobs)
    np.fill_diagonal(dmat, np.inf)
    pred = train.labels[np.argmin(dmat, axis=1)]
    return float(np.mean(pred == train.labels))


def _ratio(a, b):
    if b == 0:
        return float("inf") if a > 0 else 1.0
    return a / b


def sharpshooter(train, test, cfg, baseline=DistanceConfig("dtw"), jobs=1):
    """Expected gain (train LOOCV) and actual gain (test) of ``cfg`` over ``baseline``."""
    loo = loocv_accuracy(train, cfg, jobs)
    loo_base = loocv_accuracy(train, baseline, jobs)
    acc = 1.0 - evaluate_dataset(train, test, cfg, jobs).error_rate
    acc_base = 1.0 - evaluate_dataset(train, test, baseline, jobs).error_rate
    expected = _ratio(loo, loo_base)
    actual = _ratio(acc, acc_base)
    region = ("T" if (expected > 1) == (actual > 1) else "F") + ("P" if expected > 1 else "N")
    return {
        "dataset": train.name,
        "method": cfg.label,
        "baseline": baseline.label,
        "loocv_accuracy": loo,
        "loocv_accuracy_baseline": loo_base,
        "test_accuracy": acc,
        "test_accuracy_baseline": acc_base,
        "expected_gain": expected,
        "actual_gain": actual,
        "region": region,
    }

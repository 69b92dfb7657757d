"""shapeDTW and DTW-family alignment of time series."""

__version__ = "0.1.0"

from .core import (
    AlignmentResult,
    InfeasibleAlignmentError,
    as_series,
    pairwise_distances,
    validate_path,
    z_normalize,
)
from .steps import StepPattern, get_step_pattern, step_pattern_table
from .dtw import WdtwConfig, ddtw_align, dtw_align, wdtw_align
from .descriptors import (
    DescriptorSequence,
    compound_descriptor,
    derivative_descriptor,
    derivative_transform,
    dwt_descriptor,
    hog1d_descriptor,
    paa_descriptor,
    raw_descriptor,
    sample_subsequences,
    slope_descriptor,
)
from .pipeline import encode_series, shapedtw_align
from .metrics import PathDeviation, mean_absolute_deviation
from .simulate import SimConfig, SimulatedPair, simulate_pair, simulate_scale_vector
from .classify import (
    DistanceConfig,
    EvalReport,
    LabeledDataset,
    evaluate_dataset,
    loocv_accuracy,
    nn_classify,
)

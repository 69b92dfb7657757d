"""shapeDTW: sample windows, encode them, align the descriptor sequences."""
from .core import as_series, pairwise_distances
from .descriptors import DescriptorSequence, resolve_descriptor, sample_subsequences
from .dtw import align_cost_matrix, cost_matrix_distance

DEFAULT_DESCRIPTOR = "derivative"
DEFAULT_SUBSEQ_LEN = 30


def encode_series(series, descriptor=DEFAULT_DESCRIPTOR, l=DEFAULT_SUBSEQ_LEN):
    """Descriptor sequence of ``series``: one row per temporal point."""
    encode = resolve_descriptor(descriptor)
    seq = encode(sample_subsequences(series, l))
    if not isinstance(seq, DescriptorSequence):
        seq = DescriptorSequence(seq, getattr(descriptor, "__name__", "custom"), {"l": l})
    return seq


def shapedtw_align(P, Q, descriptor=DEFAULT_DESCRIPTOR, l=DEFAULT_SUBSEQ_LEN, pattern="symmetric1"):
    """Align ``P`` and ``Q`` through their shape-descriptor sequences.

    The reported distance is the accumulated row-wise l2 cost between the
    descriptor sequences along the optimal path; path indices address the
    original samples.
    """
    P = as_series(P, "P")
    Q = as_series(Q, "Q")
    dP = encode_series(P, descriptor, l)
    dQ = encode_series(Q, descriptor, l)
    dist = pairwise_distances(dP.desc, dQ.desc, "euclidean_rows")
    return align_cost_matrix(
        dist,
        pattern,
        {"method": "shapedtw", "descriptor": dP.name, "subseq_len": l},
    )


def shapedtw_distance(dP, dQ, pattern="symmetric1"):
    """Distance between two precomputed descriptor sequences (no path)."""
    a = dP.desc if isinstance(dP, DescriptorSequence) else dP
    b = dQ.desc if isinstance(dQ, DescriptorSequence) else dQ
    return cost_matrix_distance(pairwise_distances(a, b, "euclidean_rows"), pattern)

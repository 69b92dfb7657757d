import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from oracles import ORACLE_PATTERNS, abs_dist, brute_force_cost, keogh_derivative, path_cost
from shapedtw import InfeasibleAlignmentError, WdtwConfig, ddtw_align, dtw_align, wdtw_align
from shapedtw import get_step_pattern, step_pattern_table, validate_path
from shapedtw.dtw import wdtw_weights

PATTERNS = list(ORACLE_PATTERNS)
series = arrays(np.float64, st.integers(1, 7), elements=st.floats(-10, 10, allow_nan=False))
series3 = arrays(np.float64, st.integers(3, 7), elements=st.floats(-10, 10, allow_nan=False))


def test_table_names():
    assert [p.name for p in step_pattern_table()] == [
        "symmetric1", "symmetric2", "symmetric5", "asymmetric", "rabinerJuang"]


def test_unknown_pattern():
    with pytest.raises(KeyError):
        get_step_pattern("symmetric9")


def test_symmetric1_recursion():
    # D(i,j) = d(i,j) + min of the three neighbours
    d = np.array([[1.0, 4, 2], [3, 1, 5], [2, 6, 1]])
    D = np.empty_like(d)
    for i in range(3):
        for j in range(3):
            prev = [D[a, b] for a, b in ((i - 1, j - 1), (i, j - 1), (i - 1, j)) if a >= 0 and b >= 0]
            D[i, j] = d[i, j] + (min(prev) if prev else 0)
    from shapedtw.dtw import accumulate
    np.testing.assert_array_equal(accumulate(d, "symmetric1")[0], D)


def test_symmetric2_diagonal_weight():
    d = np.array([[0.0, 9], [9, 1.5]])
    r = dtw_align([0, 0], [0, 0], "symmetric2")
    assert r.distance == 0
    from shapedtw.dtw import accumulate
    assert accumulate(d, "symmetric2")[0][1, 1] == 3.0


def test_worked_example():
    r = dtw_align([0, 1, 2], [0, 2])
    assert r.distance == 1.0
    np.testing.assert_array_equal(r.path, [[0, 0], [1, 0], [2, 1]])
    # the alternative optimum (0,0),(1,1),(2,1) costs the same
    d = abs_dist([0, 1, 2], [0, 2])
    assert path_cost(d, [(0, 0), (1, 1), (2, 1)]) == 1.0


@pytest.mark.parametrize("pattern", ["symmetric1", "symmetric2", "symmetric5", "asymmetric", "rabinerJuang"])
def test_identity_diagonal(pattern):
    x = np.array([3.0, -1, 4, 1, 5, -9, 2])
    r = dtw_align(x, x, pattern)
    assert r.distance == 0
    np.testing.assert_array_equal(r.path, np.column_stack([np.arange(7)] * 2))


@pytest.mark.parametrize("pattern", PATTERNS)
@settings(max_examples=60, deadline=None)
@given(p=series, q=series)
def test_oracle_equivalence(pattern, p, q):
    want = brute_force_cost(abs_dist(p, q), pattern)
    if np.isinf(want):
        with pytest.raises(InfeasibleAlignmentError):
            dtw_align(p, q, pattern)
        return
    r = dtw_align(p, q, pattern)
    assert r.distance == want


@settings(max_examples=100, deadline=None)
@given(p=series, q=series)
def test_symmetric_path_is_legal_and_costed(p, q):
    for pattern in ("symmetric1", "symmetric2"):
        r = dtw_align(p, q, pattern)
        validate_path(r.path, len(p), len(q))
    r = dtw_align(p, q)
    assert r.distance == pytest.approx(path_cost(abs_dist(p, q), r.path), abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(p=series, q=series)
def test_symmetric_patterns_are_symmetric(p, q):
    for pattern in ("symmetric1", "symmetric2", "symmetric5"):
        try:
            a = dtw_align(p, q, pattern).distance
        except InfeasibleAlignmentError:
            with pytest.raises(InfeasibleAlignmentError):
                dtw_align(q, p, pattern)
            continue
        assert a == pytest.approx(dtw_align(q, p, pattern).distance, abs=1e-9)


@pytest.mark.parametrize("pattern", ["symmetric5", "rabinerJuang"])
def test_skip_patterns_infeasible(pattern):
    with pytest.raises(InfeasibleAlignmentError):
        dtw_align([1.0, 2.0], [1.0, 2.0, 3.0, 4.0, 5.0, 6.0], pattern)


def test_asymmetric_infeasible_when_query_too_short():
    # every asymmetric step advances i, so j can grow by at most 2 per row
    with pytest.raises(InfeasibleAlignmentError):
        dtw_align([1.0, 2.0], [1.0, 2.0, 3.0, 4.0], "asymmetric")


def test_normalized_distance():
    r = dtw_align([0, 1, 2], [0, 2], "symmetric2")
    assert r.normalized_distance == r.distance / 5
    assert dtw_align([0, 1, 2], [0, 2]).normalized_distance is None


def test_empty_series():
    with pytest.raises(ValueError):
        dtw_align([], [1.0])


# ---------------------------------------------------------------- dDTW


def test_ddtw_offset_ramps():
    t = np.arange(10.0)
    assert ddtw_align(2 * t, 2 * t + 7).distance == 0


def test_ddtw_short():
    with pytest.raises(ValueError):
        ddtw_align([1.0, 2.0], [1.0, 2.0, 3.0])


@settings(max_examples=100, deadline=None)
@given(p=series3, q=series3)
def test_ddtw_oracle(p, q):
    want = brute_force_cost(abs_dist(keogh_derivative(p), keogh_derivative(q)))
    assert ddtw_align(p, q).distance == pytest.approx(want, abs=1e-12)


# ---------------------------------------------------------------- wDTW


def test_wdtw_weights_formula():
    w = wdtw_weights(4, 7, WdtwConfig(g=0.3, w_max=2.0))
    mc = 4  # ceil(7 / 2)
    for i in range(4):
        for j in range(7):
            assert w[i, j] == pytest.approx(2.0 / (1 + np.exp(-0.3 * (abs(i - j) - mc))), rel=1e-15)


def test_wdtw_config_validation():
    with pytest.raises(ValueError):
        WdtwConfig(g=-1)
    with pytest.raises(ValueError):
        WdtwConfig(w_max=0)


@settings(max_examples=100, deadline=None)
@given(p=series, q=series)
def test_wdtw_g0_same_path(p, q):
    a = wdtw_align(p, q, WdtwConfig(g=0.0))
    b = dtw_align(p, q)
    np.testing.assert_array_equal(a.path, b.path)
    assert a.distance == pytest.approx(b.distance / 2, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(p=series, q=series)
def test_wdtw_oracle(p, q):
    d = abs_dist(p, q) * wdtw_weights(len(p), len(q), WdtwConfig(g=0.1))
    assert wdtw_align(p, q).distance == pytest.approx(brute_force_cost(d), abs=1e-12)


def test_wdtw_identity():
    x = np.sin(np.arange(12.0))
    assert wdtw_align(x, x).distance == 0

"""Local shape descriptors.

Every temporal point is represented by the subsequence (window) centred on
it, and each window is mapped to a fixed-length vector. All descriptor
functions take the ``(L, l, d)`` window array from
:func:`sample_subsequences` and return a :class:`DescriptorSequence` with
``L`` rows. Multichannel windows are encoded channel by channel and the
per-channel vectors concatenated (channel-major).
"""
from dataclasses import dataclass, field

import numpy as np

from .core import as_series


@dataclass(frozen=True)
class DescriptorSequence:
    desc: np.ndarray  # (L, m)
    name: str
    params: dict = field(default_factory=dict)

    def __len__(self):
        return self.desc.shape[0]

    @property
    def dim(self):
        return self.desc.shape[1]


def sample_subsequences(series, l):
    """Window of length ``l`` around every point, endpoints replicated.

    Window ``i`` covers indices ``i - l//2 ... i - l//2 + l - 1``; for even
    ``l`` that is ``l//2`` points left of the centre and ``l//2 - 1`` right.
    Returns an array of shape ``(L, l, d)``.
    """
    if int(l) != l or l < 1:
        raise ValueError(f"subsequence length must be a positive integer, got {l}")
    l = int(l)
    x = as_series(series)
    L = x.shape[0]
    idx = np.arange(L)[:, None] - l // 2 + np.arange(l)[None, :]
    np.clip(idx, 0, L - 1, out=idx)
    return x[idx]


def _as_windows(subs):
    w = np.asarray(subs, dtype=np.float64)
    if w.ndim == 2:
        w = w[:, :, None]
    if w.ndim != 3:
        raise ValueError(f"windows must have shape (L, l, d), got {w.shape}")
    return w


def _per_channel(subs, fn):
    w = _as_windows(subs)
    return np.concatenate([fn(w[:, :, c]) for c in range(w.shape[2])], axis=1)


def interval_bounds(l, m):
    """Start/stop of ``m`` near-equal intervals covering ``range(l)``."""
    edges = (np.arange(m + 1) * l) // m
    return edges[:-1], edges[1:]


# --------------------------------------------------------------------------
# per-channel encoders, operating on (N, l) window matrices


def _paa(w, m):
    starts, stops = interval_bounds(w.shape[1], m)
    sums = np.add.reduceat(w, starts, axis=1)
    return sums / (stops - starts)


def haar_dwt(x, levels):
    """Orthonormal Haar transform along the last axis.

    Returns ``(details, approx)`` with ``details[0]`` the finest level. The
    last-axis length must be divisible by ``2**levels``.
    """
    a = np.asarray(x, dtype=np.float64)
    if a.shape[-1] % (1 << levels):
        raise ValueError("length not divisible by 2**levels")
    details = []
    s = np.sqrt(2.0)
    for _ in range(levels):
        even, odd = a[..., 0::2], a[..., 1::2]
        details.append((even - odd) / s)
        a = (even + odd) / s
    return details, a


def _dwt(w, levels=3):
    block = 1 << levels
    l = w.shape[1]
    padded_len = max(block, -(-l // block) * block)
    if padded_len != l:
        w = np.concatenate([w, np.repeat(w[:, -1:], padded_len - l, axis=1)], axis=1)
    details, approx = haar_dwt(w, levels)
    return np.concatenate(details + [approx], axis=1)


def tls_slope(t, y):
    """Total-least-squares slope of points ``(t, y)`` along the last axis.

    This is the direction of the principal eigenvector of the 2x2 covariance
    of ``(t, y)``. A vertical principal direction (zero covariance, larger
    variance in y) has no finite slope and is reported as 0.
    """
    t = np.asarray(t, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    tc = t - t.mean(axis=-1, keepdims=True)
    yc = y - y.mean(axis=-1, keepdims=True)
    stt = (tc * tc).sum(axis=-1)
    syy = (yc * yc).sum(axis=-1)
    sty = (tc * yc).sum(axis=-1)
    diff = stt - syy
    root = np.sqrt(diff * diff + 4.0 * sty * sty)
    with np.errstate(divide="ignore", invalid="ignore"):
        # two algebraically equal forms; pick the one without cancellation
        flat = 2.0 * sty / (diff + root)
        steep = (root - diff) / (2.0 * sty)
    slope = np.where(diff >= 0, flat, steep)
    return np.where(np.isfinite(slope), slope, 0.0)


def _slope(w, m):
    l = w.shape[1]
    starts, stops = interval_bounds(l, m)
    if np.any(stops - starts < 2):
        raise ValueError(f"slope needs >= 2 points per interval (l={l}, m={m})")
    cols = []
    for a, b in zip(starts, stops):
        t = np.arange(1, b - a + 1, dtype=np.float64)
        cols.append(tls_slope(np.broadcast_to(t, (w.shape[0], b - a)), w[:, a:b]))
    return np.stack(cols, axis=1)


def derivative_transform(x, axis=0):
    """Numeric derivative used by derivative DTW.

    Interior points: ``((x[i] - x[i-1]) + (x[i+1] - x[i-1]) / 2) / 2``;
    the two endpoints copy their neighbour's value.
    """
    a = np.asarray(x, dtype=np.float64)
    a = np.moveaxis(a, axis, -1)
    if a.shape[-1] < 3:
        raise ValueError("derivative needs at least 3 points")
    prev, mid, nxt = a[..., :-2], a[..., 1:-1], a[..., 2:]
    inner = ((mid - prev) + (nxt - prev) / 2.0) / 2.0
    out = np.concatenate([inner[..., :1], inner, inner[..., -1:]], axis=-1)
    return np.moveaxis(out, -1, axis)


def _hog1d(w, bins, intervals, sigma):
    l = w.shape[1]
    if l < 2 * intervals:
        raise ValueError(f"window length {l} too short for {intervals} HOG1D intervals")
    padded = np.concatenate([w[:, :1], w, w[:, -1:]], axis=1)
    grad = (padded[:, 2:] - padded[:, :-2]) / 2.0
    # sigma scales the time axis: the curve (sigma * t, x) has slope grad / sigma
    sg = grad / sigma
    theta = np.arctan(sg)
    weight = np.sqrt(1.0 + sg * sg)
    b = np.floor((theta + np.pi / 2) / (np.pi / bins)).astype(np.int64)
    np.clip(b, 0, bins - 1, out=b)
    votes = (b[:, :, None] == np.arange(bins)) * weight[:, :, None]
    starts, stops = interval_bounds(l, intervals)
    return np.concatenate([votes[:, a:s].sum(axis=1) for a, s in zip(starts, stops)], axis=1)


# --------------------------------------------------------------------------
# public descriptors


def raw_descriptor(subs):
    w = _as_windows(subs)
    return DescriptorSequence(_per_channel(w, lambda c: c.copy()), "raw", {"l": w.shape[1]})


def paa_descriptor(subs, m=5):
    w = _as_windows(subs)
    if not 1 <= m <= w.shape[1]:
        raise ValueError(f"PAA needs 1 <= m <= l (m={m}, l={w.shape[1]})")
    return DescriptorSequence(_per_channel(w, lambda c: _paa(c, m)), "paa", {"l": w.shape[1], "m": m})


def dwt_descriptor(subs, levels=3):
    """Haar detail coefficients of levels 1..3 followed by the level-3 approximation.

    Windows are right-padded by edge replication to a multiple of 8.
    """
    w = _as_windows(subs)
    return DescriptorSequence(
        _per_channel(w, lambda c: _dwt(c, levels)), "dwt", {"l": w.shape[1], "levels": levels}
    )


def slope_descriptor(subs, m=5):
    w = _as_windows(subs)
    return DescriptorSequence(_per_channel(w, lambda c: _slope(c, m)), "slope", {"l": w.shape[1], "m": m})


def derivative_descriptor(subs):
    w = _as_windows(subs)
    return DescriptorSequence(
        _per_channel(w, lambda c: derivative_transform(c, axis=1)), "derivative", {"l": w.shape[1]}
    )


def hog1d_descriptor(subs, bins=8, intervals=2, sigma=0.1):
    """Concatenated gradient-orientation histograms (16-D per channel by default).

    Gradients ``g`` are centred differences with replicated endpoints; each
    point votes ``sqrt(1 + (g/sigma)**2)`` (the length of the tangent
    ``(1, g/sigma)``) into the bin of ``arctan(g/sigma)``, bins splitting
    ``[-pi/2, pi/2)`` evenly.
    """
    w = _as_windows(subs)
    return DescriptorSequence(
        _per_channel(w, lambda c: _hog1d(c, bins, intervals, sigma)),
        "hog1d",
        {"l": w.shape[1], "bins": bins, "intervals": intervals, "sigma": sigma},
    )


def compound_descriptor(A, B, gamma=1.0):
    if len(A) != len(B):
        raise ValueError(f"descriptor sequences differ in length: {len(A)} vs {len(B)}")
    return DescriptorSequence(
        np.concatenate([A.desc, gamma * B.desc], axis=1),
        f"compound:{A.name}+{B.name}:{gamma:g}",
        {"A": A.params, "B": B.params, "gamma": gamma},
    )


DESCRIPTORS = {
    "raw": raw_descriptor,
    "paa": paa_descriptor,
    "dwt": dwt_descriptor,
    "slope": slope_descriptor,
    "derivative": derivative_descriptor,
    "hog1d": hog1d_descriptor,
}


def resolve_descriptor(spec):
    """Turn a descriptor spec string into ``windows -> DescriptorSequence``.

    Accepts the names in ``DESCRIPTORS`` and ``compound:<A>+<B>:<gamma>``
    (gamma defaults to 1).
    """
    if callable(spec):
        return spec
    spec = str(spec).strip()
    if spec.startswith("compound:"):
        body = spec[len("compound:"):]
        parts, gamma = body.rsplit(":", 1) if body.count(":") else (body, "1")
        try:
            a, b = parts.split("+")
            gamma = float(gamma)
        except ValueError:
            raise ValueError(f"bad compound descriptor {spec!r}; use compound:<A>+<B>:<gamma>") from None
        fa, fb = resolve_descriptor(a), resolve_descriptor(b)
        return lambda subs: compound_descriptor(fa(subs), fb(subs), gamma)
    try:
        return DESCRIPTORS[spec]
    except KeyError:
        raise ValueError(f"unknown descriptor {spec!r}; expected one of {sorted(DESCRIPTORS)} or compound:A+B:gamma") from None

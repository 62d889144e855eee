"""Fidelity and information metrics, plus the noising protocol."""

from __future__ import annotations

import math

import numpy as np

from .errors import DegenerateSignalError
from .signal import Signal

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True)
def _apen_kernel(x, m, r):
    n = x.shape[0]
    total = 0.0
    nwin = n - m + 1
    for i in range(nwin):
        count = 0
        for j in range(nwin):
            d = 0.0
            for t in range(m):
                diff = abs(x[i + t] - x[j + t])
                if diff > d:
                    d = diff
            if d <= r:
                count += 1
        total += math.log(count / nwin)
    return total / nwin


def approx_entropy(signal: Signal, m: int = 2, r: float | None = None) -> float:
    """Approximate entropy ApEn(m, r): phi_m - phi_{m+1}, where phi_m is
    the average log frequency of m-length window matches within Chebyshev
    radius r (self-matches counted).

    Defaults to the usual convention: m = 2, r = 0.2 x the signal's own
    standard deviation.
    """
    x = signal.values
    n = len(x)
    if n <= m + 1:
        raise ValueError(f"signal length {n} too short for m={m}")
    if r is None:
        r = 0.2 * float(np.std(x))
    if r < 0:
        raise ValueError(f"tolerance radius must be >= 0, got {r}")
    return float(_apen_kernel(x, m, r) - _apen_kernel(x, m + 1, r))


@njit(cache=True)
def _dtw_kernel(a, b):
    n = a.shape[0]
    m = b.shape[0]
    inf = np.inf
    prev = np.empty(m, dtype=np.float64)
    cur = np.empty(m, dtype=np.float64)
    for j in range(m):
        d = a[0] - b[j]
        prev[j] = d * d + (prev[j - 1] if j > 0 else 0.0)
    for i in range(1, n):
        d = a[i] - b[0]
        cur[0] = d * d + prev[0]
        for j in range(1, m):
            d = a[i] - b[j]
            best = prev[j]
            if prev[j - 1] < best:
                best = prev[j - 1]
            if cur[j - 1] < best:
                best = cur[j - 1]
            cur[j] = d * d + best
        prev, cur = cur, prev
    return math.sqrt(prev[m - 1])


def dtw_distance(a: Signal | np.ndarray, b: Signal | np.ndarray) -> float:
    """Dynamic time warping distance: full alignment grid, squared
    pointwise cost, square root of the optimal path cost."""
    xa = a.values if isinstance(a, Signal) else np.asarray(a, dtype=np.float64)
    xb = b.values if isinstance(b, Signal) else np.asarray(b, dtype=np.float64)
    if len(xa) == 0 or len(xb) == 0:
        raise ValueError("dtw inputs must be nonempty")
    return float(_dtw_kernel(np.ascontiguousarray(xa), np.ascontiguousarray(xb)))


def standardize(signal: Signal) -> Signal:
    """Center to mean 0 and scale to unit population (1/n) std."""
    x = signal.values
    std = float(np.std(x))
    if std == 0.0:
        raise DegenerateSignalError("constant signal cannot be standardized")
    return Signal((x - np.mean(x)) / std, signal.sample_rate_hz, signal.start_index)


def add_gaussian_noise(signal: Signal, noise_multiple: float, seed: int) -> Signal:
    """Add i.i.d. N(0, noise_multiple^2) draws; on a standardized signal
    the multiple is the noise-to-signal std ratio."""
    if noise_multiple < 0:
        raise ValueError(f"noise multiple must be >= 0, got {noise_multiple}")
    if noise_multiple == 0:
        return signal
    rng = np.random.default_rng(seed)
    noise = rng.normal(0.0, noise_multiple, size=len(signal))
    return Signal(signal.values + noise, signal.sample_rate_hz, signal.start_index)


RAW_BYTES_PER_SAMPLE = 4


def compression_fraction(original: Signal | int, payload_bytes: int) -> float:
    """1 - payload / raw size, with a 4-bytes-per-sample raw baseline."""
    if payload_bytes < 0:
        raise ValueError("payload bytes must be >= 0")
    n = original if isinstance(original, int) else len(original)
    return 1.0 - payload_bytes / (RAW_BYTES_PER_SAMPLE * n)

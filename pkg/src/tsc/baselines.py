"""Counterfactual lossy compressors: per-window means (PAA), Fourier
coefficient subsets (DFT), and random subsampling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CorruptionError, FormatError, TruncationError
from .signal import CompressedSignal, Method, Signal
from .wire import (
    HEADER_SIZE,
    MAGIC,
    VERSION,
    decode_varint,
    encode_varint,
    varint_len,
)


def paa_compress(signal: Signal, window: int) -> CompressedSignal:
    """One point per window at its first index, valued at the window mean.

    A short final window is averaged over the samples it actually has.
    """
    n = len(signal)
    if window < 1 or window > n:
        raise ValueError(f"window must be in [1, {n}], got {window}")
    starts = np.arange(0, n, window, dtype=np.int64)
    means = np.array(
        [signal.values[s : s + window].mean() for s in starts], dtype=np.float64
    )
    return CompressedSignal(starts, means, n, signal.sample_rate_hz, Method.PAA)


def paa_reconstruct(compressed: CompressedSignal) -> Signal:
    """Piecewise-constant: every sample takes its window's mean."""
    n = compressed.original_length
    values = np.empty(n, dtype=np.float64)
    bounds = np.append(compressed.indices, n)
    for val, lo, hi in zip(compressed.values, bounds[:-1], bounds[1:]):
        values[lo:hi] = val
    return Signal(values, compressed.sample_rate_hz)


@dataclass(frozen=True)
class DftCompressed:
    """Kept half-spectrum bins of a real signal; conjugate symmetry implied."""

    bins: np.ndarray  # distinct ints in [0, n//2]
    coefficients: np.ndarray  # complex, aligned with bins
    original_length: int
    sample_rate_hz: float

    def __post_init__(self):
        bins = np.asarray(self.bins, dtype=np.int64)
        coef = np.asarray(self.coefficients, dtype=np.complex128)
        bins.setflags(write=False)
        coef.setflags(write=False)
        object.__setattr__(self, "bins", bins)
        object.__setattr__(self, "coefficients", coef)
        if bins.shape != coef.shape or bins.ndim != 1:
            raise ValueError("bins and coefficients must be 1-D arrays of equal length")
        if len(bins) and (np.any(np.diff(np.sort(bins)) == 0)):
            raise ValueError("bins must be distinct")
        half = self.original_length // 2
        if len(bins) and (bins.min() < 0 or bins.max() > half):
            raise ValueError(f"bins must lie in [0, {half}]")

    def __len__(self) -> int:
        return len(self.bins)


def dft_compress(signal: Signal, k: int, selection: str = "largest") -> DftCompressed:
    """Keep k half-spectrum coefficients.

    selection="largest" keeps the k largest-magnitude bins (ties to the
    lower bin); "first" keeps bins 0..k-1.
    """
    n = len(signal)
    half = n // 2
    if not 1 <= k <= half + 1:
        raise ValueError(f"k must be in [1, {half + 1}], got {k}")
    spectrum = np.fft.rfft(signal.values)
    if selection == "largest":
        # stable sort on -|c| keeps lower bins first among ties
        chosen = np.argsort(-np.abs(spectrum), kind="stable")[:k]
        chosen = np.sort(chosen)
    elif selection == "first":
        chosen = np.arange(k)
    else:
        raise ValueError(f"unknown selection {selection!r}")
    return DftCompressed(
        chosen.astype(np.int64), spectrum[chosen], n, signal.sample_rate_hz
    )


def dft_reconstruct(compressed: DftCompressed) -> Signal:
    """Inverse transform with the non-kept bins zeroed."""
    n = compressed.original_length
    spectrum = np.zeros(n // 2 + 1, dtype=np.complex128)
    spectrum[compressed.bins] = compressed.coefficients
    values = np.fft.irfft(spectrum, n=n)
    return Signal(values, compressed.sample_rate_hz)


def dft_wire_cost(compressed: DftCompressed) -> int:
    """Byte accounting for DFT payloads: header + per-coefficient varint
    bin delta + two f32 (real, imaginary)."""
    bins = np.sort(compressed.bins)
    deltas = np.diff(bins, prepend=0)
    return HEADER_SIZE + sum(varint_len(int(d)) for d in deltas) + 8 * len(bins)


def encode_dft_wire(compressed: DftCompressed) -> bytes:
    """Same header as the point format (method tag 2); per coefficient a
    varint bin delta then real and imaginary parts as f32."""
    import struct

    order = np.argsort(compressed.bins)
    bins = compressed.bins[order]
    coef = compressed.coefficients[order]
    out = bytearray()
    out += MAGIC
    out.append(VERSION)
    out.append(int(Method.DFT))
    out += b"\x00\x00"
    out += struct.pack("<II", compressed.original_length, len(bins))
    prev = 0
    for b, c in zip(bins, coef):
        out += encode_varint(int(b) - prev)
        out += struct.pack("<ff", float(c.real), float(c.imag))
        prev = int(b)
    return bytes(out)


def decode_dft_wire(data: bytes, sample_rate_hz: float = 1.0) -> DftCompressed:
    import struct

    if len(data) < HEADER_SIZE:
        raise TruncationError("payload shorter than header")
    if data[:4] != MAGIC or data[4] != VERSION:
        raise FormatError("bad magic or version")
    if data[5] != int(Method.DFT):
        raise FormatError(f"not a DFT payload (method tag {data[5]})")
    original_length, count = struct.unpack_from("<II", data, 8)
    offset = HEADER_SIZE
    bins = np.empty(count, dtype=np.int64)
    coef = np.empty(count, dtype=np.complex128)
    position = 0
    for i in range(count):
        delta, offset = decode_varint(data, offset)
        if i > 0 and delta == 0:
            raise CorruptionError("non-increasing bin sequence")
        position += delta
        bins[i] = position
        if offset + 8 > len(data):
            raise TruncationError("coefficient runs past end of payload")
        re, im = struct.unpack_from("<ff", data, offset)
        coef[i] = complex(re, im)
        offset += 8
    if offset != len(data):
        raise CorruptionError("trailing bytes after payload")
    try:
        return DftCompressed(bins, coef, int(original_length), sample_rate_hz)
    except ValueError as exc:
        raise CorruptionError(str(exc)) from exc


def random_compress(signal: Signal, k: int, seed: int) -> CompressedSignal:
    """Keep the endpoints plus k-2 interior samples drawn uniformly
    without replacement; deterministic per seed."""
    n = len(signal)
    if not 2 <= k <= n:
        raise ValueError(f"k must be in [2, {n}], got {k}")
    rng = np.random.default_rng(seed)
    interior = rng.choice(np.arange(1, n - 1), size=k - 2, replace=False)
    idx = np.sort(np.concatenate(([0], interior, [n - 1]))).astype(np.int64)
    return CompressedSignal(
        idx, signal.values[idx], n, signal.sample_rate_hz, Method.RANDOM
    )

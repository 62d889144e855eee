"""Core domain types: sampled signals, compressed signals, budgets."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class Method(enum.IntEnum):
    """Compression method tag carried in the wire header."""

    TSC = 0
    PAA = 1
    DFT = 2
    RANDOM = 3


class BudgetKind(enum.Enum):
    BYTES = "bytes"
    POINTS = "points"
    PERSISTENCE_THRESHOLD = "threshold"
    COMPRESSION_FRACTION = "fraction"


@dataclass(frozen=True)
class Budget:
    """Compression target: byte ceiling, point count, persistence cutoff,
    or fraction of raw size to shave off."""

    kind: BudgetKind
    amount: float

    def __post_init__(self):
        if self.kind is BudgetKind.COMPRESSION_FRACTION:
            if not (0.0 <= self.amount < 1.0):
                raise ValueError(f"compression fraction must be in [0, 1), got {self.amount}")
        elif self.kind is BudgetKind.POINTS:
            if self.amount != int(self.amount) or self.amount < 2:
                raise ValueError(f"point budget must be an integer >= 2, got {self.amount}")
        elif self.amount < 0:
            raise ValueError(f"budget amount must be non-negative, got {self.amount}")


@dataclass(frozen=True)
class Signal:
    """Uniformly sampled real-valued series.

    Samples are held as float64 regardless of the on-disk precision; the
    wire boundary is the only place values get quantized.
    """

    values: np.ndarray
    sample_rate_hz: float
    start_index: int = 0

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if values.ndim != 1 or len(values) < 2:
            raise ValueError("signal needs at least 2 samples in a 1-D array")
        if not np.all(np.isfinite(values)):
            raise ValueError("signal values must be finite")
        if self.sample_rate_hz <= 0:
            raise ValueError("sample rate must be positive")

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Signal):
            return NotImplemented
        return (
            np.array_equal(self.values, other.values)
            and self.sample_rate_hz == other.sample_rate_hz
            and self.start_index == other.start_index
        )


@dataclass(frozen=True)
class CompressedSignal:
    """Surviving (index, value) samples plus enough metadata to reconstruct."""

    indices: np.ndarray
    values: np.ndarray
    original_length: int
    sample_rate_hz: float
    method: Method = Method.TSC

    def __post_init__(self):
        indices = np.asarray(self.indices, dtype=np.int64)
        values = np.asarray(self.values, dtype=np.float64)
        indices.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "values", values)
        if indices.shape != values.shape or indices.ndim != 1:
            raise ValueError("indices and values must be 1-D arrays of equal length")
        if len(indices) == 0:
            raise ValueError("compressed signal needs at least one point")
        if self.original_length <= 0:
            raise ValueError("original length must be positive")
        if np.any(np.diff(indices) <= 0):
            raise ValueError("indices must be strictly increasing")
        if indices[0] < 0 or indices[-1] >= self.original_length:
            raise ValueError("indices must lie in [0, original_length)")
        if self.method is Method.TSC:
            if indices[0] != 0 or indices[-1] != self.original_length - 1:
                raise ValueError("TSC compression must retain both endpoints")

    @property
    def points(self) -> list[tuple[int, float]]:
        return list(zip(self.indices.tolist(), self.values.tolist()))

    def __len__(self) -> int:
        return len(self.indices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompressedSignal):
            return NotImplemented
        return (
            np.array_equal(self.indices, other.indices)
            and np.array_equal(self.values, other.values)
            and self.original_length == other.original_length
            and self.sample_rate_hz == other.sample_rate_hz
            and self.method == other.method
        )


def compressed_from_points(
    points: list[tuple[int, float]],
    original_length: int,
    sample_rate_hz: float,
    method: Method = Method.TSC,
) -> CompressedSignal:
    idx = np.array([p[0] for p in points], dtype=np.int64)
    val = np.array([p[1] for p in points], dtype=np.float64)
    return CompressedSignal(idx, val, original_length, sample_rate_hz, method)

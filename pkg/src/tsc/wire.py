"""Compact binary wire format for compressed signals.

Layout (little-endian):
  bytes 0-3   magic "TSC1"
  byte  4     version (1)
  byte  5     method tag (0=TSC, 1=PAA, 2=DFT, 3=RANDOM)
  bytes 6-7   reserved, zero
  bytes 8-11  original length (u32)
  bytes 12-15 point count (u32)
  per point:  LEB128 varint of the index delta (first delta = first index),
              then the value as an IEEE-754 f32.

The sample rate is deliberately not transmitted; the receiver is assumed
to know it.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import CorruptionError, FormatError, TruncationError
from .signal import CompressedSignal, Method

MAGIC = b"TSC1"
VERSION = 1
HEADER_SIZE = 16
VALUE_SIZE = 4


def encode_varint(value: int) -> bytes:
    """LEB128-encode a non-negative integer."""
    if value < 0:
        raise ValueError(f"cannot varint-encode negative value {value}")
    out = bytearray()
    while value > 0x7F:
        out.append((value & 0x7F) | 0x80)
        value >>= 7
    out.append(value)
    return bytes(out)


def varint_len(value: int) -> int:
    """Number of bytes encode_varint would emit."""
    if value < 0:
        raise ValueError(f"negative value {value}")
    n = 1
    while value > 0x7F:
        value >>= 7
        n += 1
    return n


def decode_varint(data: bytes, offset: int) -> tuple[int, int]:
    """Decode one LEB128 varint starting at offset; returns (value, new_offset)."""
    result = 0
    shift = 0
    while True:
        if offset >= len(data):
            raise TruncationError("varint runs past end of payload")
        byte = data[offset]
        offset += 1
        result |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return result, offset
        shift += 7
        if shift > 63:
            raise CorruptionError("varint longer than 64 bits")


def wire_cost(point_count: int, deltas: list[int] | np.ndarray) -> int:
    """Exact byte size encode_wire would produce for these index deltas."""
    if len(deltas) != point_count:
        raise ValueError("deltas must have one entry per point")
    return HEADER_SIZE + sum(varint_len(int(d)) for d in deltas) + VALUE_SIZE * point_count


def deltas_of(indices: np.ndarray) -> np.ndarray:
    """Per-point index deltas: first delta is the first index itself."""
    indices = np.asarray(indices, dtype=np.int64)
    return np.diff(indices, prepend=0)


def wire_cost_of(compressed: CompressedSignal) -> int:
    return wire_cost(len(compressed), deltas_of(compressed.indices))


def encode_wire(compressed: CompressedSignal) -> bytes:
    """Serialize a compressed signal; values are quantized to f32 here."""
    out = bytearray()
    out += MAGIC
    out.append(VERSION)
    out.append(int(compressed.method))
    out += b"\x00\x00"
    out += struct.pack("<II", compressed.original_length, len(compressed))
    values_f32 = compressed.values.astype("<f4")
    for delta, value in zip(deltas_of(compressed.indices), values_f32):
        out += encode_varint(int(delta))
        out += value.tobytes()
    return bytes(out)


def decode_wire(data: bytes, sample_rate_hz: float = 1.0) -> CompressedSignal:
    """Parse wire bytes back into a CompressedSignal.

    The sample rate is not in the format; pass the receiver-known rate.
    """
    if len(data) < HEADER_SIZE:
        raise TruncationError(f"payload is {len(data)} bytes, header needs {HEADER_SIZE}")
    if data[:4] != MAGIC:
        raise FormatError(f"bad magic {data[:4]!r}")
    if data[4] != VERSION:
        raise FormatError(f"unsupported version {data[4]}")
    try:
        method = Method(data[5])
    except ValueError as exc:
        raise FormatError(f"unknown method tag {data[5]}") from exc
    if data[6:8] != b"\x00\x00":
        raise FormatError("reserved header bytes are nonzero")
    original_length, count = struct.unpack_from("<II", data, 8)
    if count == 0:
        raise CorruptionError("point count is zero")

    offset = HEADER_SIZE
    indices = np.empty(count, dtype=np.int64)
    values = np.empty(count, dtype=np.float64)
    position = 0
    for i in range(count):
        delta, offset = decode_varint(data, offset)
        if i > 0 and delta == 0:
            raise CorruptionError("non-increasing index sequence")
        position += delta
        if position >= original_length:
            raise CorruptionError(f"index {position} >= original length {original_length}")
        indices[i] = position
        if offset + VALUE_SIZE > len(data):
            raise TruncationError("value runs past end of payload")
        values[i] = struct.unpack_from("<f", data, offset)[0]
        offset += VALUE_SIZE
    if offset != len(data):
        raise CorruptionError(f"{len(data) - offset} trailing bytes after payload")
    try:
        return CompressedSignal(indices, values, int(original_length), sample_rate_hz, method)
    except ValueError as exc:
        raise CorruptionError(str(exc)) from exc

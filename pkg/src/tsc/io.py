"""File ingestion and export: mono PCM WAV and one-value-per-line CSV."""

from __future__ import annotations

import wave
from pathlib import Path

import numpy as np

from .errors import FormatError, UnsupportedChannelError
from .signal import Signal


def read_wav(path: str | Path) -> Signal:
    """Load a mono PCM WAV file, scaling samples into [-1, 1].

    8-bit files are unsigned (offset 128), 16-bit are signed; both divide
    by the type's max magnitude (128 and 32768 respectively).
    """
    try:
        with wave.open(str(path), "rb") as wav:
            n_channels = wav.getnchannels()
            if n_channels != 1:
                raise UnsupportedChannelError(
                    f"{path}: expected mono audio, got {n_channels} channels"
                )
            width = wav.getsampwidth()
            rate = wav.getframerate()
            n_frames = wav.getnframes()
            raw = wav.readframes(n_frames)
    except wave.Error as exc:
        raise FormatError(f"{path}: not a valid PCM WAV file ({exc})") from exc

    if width == 1:
        samples = (np.frombuffer(raw, dtype=np.uint8).astype(np.float64) - 128.0) / 128.0
    elif width == 2:
        samples = np.frombuffer(raw, dtype="<i2").astype(np.float64) / 32768.0
    else:
        raise FormatError(f"{path}: unsupported sample width {8 * width} bits")
    return Signal(samples, sample_rate_hz=float(rate))


def write_wav(path: str | Path, signal: Signal) -> None:
    """Write a signal as 16-bit mono PCM, clipping to [-1, 1]."""
    clipped = np.clip(signal.values, -1.0, 1.0)
    pcm = np.round(clipped * 32767.0).astype("<i2")
    with wave.open(str(path), "wb") as wav:
        wav.setnchannels(1)
        wav.setsampwidth(2)
        wav.setframerate(int(round(signal.sample_rate_hz)))
        wav.writeframes(pcm.tobytes())


def read_csv(path: str | Path, sample_rate_hz: float = 1.0) -> Signal:
    """Load a signal from a UTF-8 CSV with one sample per line.

    A single non-numeric first line is treated as a header and skipped.
    """
    lines = [ln.strip() for ln in Path(path).read_text(encoding="utf-8").splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError(f"{path}: empty file")
    start = 0
    try:
        float(lines[0])
    except ValueError:
        start = 1
    try:
        values = np.array([float(ln) for ln in lines[start:]], dtype=np.float64)
    except ValueError as exc:
        raise FormatError(f"{path}: non-numeric sample line ({exc})") from exc
    if len(values) < 2:
        raise FormatError(f"{path}: need at least 2 samples")
    return Signal(values, sample_rate_hz=sample_rate_hz)


def write_csv(path: str | Path, signal: Signal) -> None:
    Path(path).write_text(
        "\n".join(repr(v) for v in signal.values.tolist()) + "\n", encoding="utf-8"
    )


def read_signal(path: str | Path, sample_rate_hz: float = 1.0) -> Signal:
    """Dispatch on file extension: .wav -> WAV parser, anything else -> CSV."""
    if str(path).lower().endswith(".wav"):
        return read_wav(path)
    return read_csv(path, sample_rate_hz=sample_rate_hz)

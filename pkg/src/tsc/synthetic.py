"""Synthetic spoken-digit-like corpus for benchmarking when the real
8 kHz recordings are not on disk.

Each signal is a short burst of amplitude-modulated harmonics over a
wandering pitch plus broadband noise, mean-trimmed like the real corpus.
Filenames follow the {digit}_{speaker}_{take}.wav convention.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .io import write_wav
from .signal import Signal

SAMPLE_RATE_HZ = 8000.0


def synthetic_utterance(
    digit: int, speaker: int, take: int, seed: int = 0, length: int | None = None
) -> Signal:
    """Deterministic pseudo-speech signal keyed by (digit, speaker, take, seed)."""
    rng = np.random.default_rng((seed, digit, speaker, take))
    n = length if length is not None else int(rng.integers(1800, 3200))
    t = np.arange(n) / SAMPLE_RATE_HZ

    base = 95.0 + 9.0 * speaker + 4.0 * digit
    drift = rng.normal(0.0, 18.0) * t + 10.0 * np.sin(2 * np.pi * rng.uniform(1, 4) * t)
    phase = 2 * np.pi * np.cumsum(base + drift) / SAMPLE_RATE_HZ

    x = np.zeros(n)
    for h in range(1, 6):
        amp = rng.uniform(0.2, 1.0) / h
        x += amp * np.sin(h * phase + rng.uniform(0, 2 * np.pi))

    # 2-4 syllable-like energy bumps
    envelope = np.zeros(n)
    for _ in range(int(rng.integers(2, 5))):
        center = rng.uniform(0.15, 0.85) * n
        width = rng.uniform(0.05, 0.2) * n
        envelope += rng.uniform(0.4, 1.0) * np.exp(-0.5 * ((np.arange(n) - center) / width) ** 2)
    envelope /= max(envelope.max(), 1e-9)

    x = x * envelope + rng.normal(0.0, 0.06, size=n)
    x = 0.8 * x / max(np.abs(x).max(), 1e-9)
    return Signal(x, SAMPLE_RATE_HZ)


def write_corpus(
    directory: str | Path,
    n_signals: int = 50,
    seed: int = 0,
    length: int | None = None,
) -> list[Path]:
    """Write n_signals WAV files named like spoken-digit recordings."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for i in range(n_signals):
        digit = i % 10
        speaker = (i // 10) % 6
        take = i // 60
        sig = synthetic_utterance(digit, speaker, take, seed=seed, length=length)
        path = directory / f"{digit}_{speaker}_{take}.wav"
        write_wav(path, sig)
        paths.append(path)
    return paths

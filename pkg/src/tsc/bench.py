"""Corpus sweep: compress every signal at every (method, fraction,
noise) cell under a common byte budget, then score the reconstructions.

Every method is driven by the same byte budget floor((1 - fraction) * 4n)
so achieved compression fractions are comparable across methods.
"""

from __future__ import annotations

import csv
import math
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .baselines import (
    DftCompressed,
    dft_compress,
    dft_reconstruct,
    dft_wire_cost,
    paa_compress,
    paa_reconstruct,
    random_compress,
)
from .errors import BudgetInfeasibleError
from .io import read_signal
from .metrics import (
    RAW_BYTES_PER_SAMPLE,
    approx_entropy,
    add_gaussian_noise,
    compression_fraction,
    dtw_distance,
    standardize,
)
from .signal import Budget, BudgetKind, Signal
from .simplify import reconstruct, simplify
from .wire import HEADER_SIZE, varint_len, wire_cost_of

METHODS = ("tsc", "paa", "dft", "random")

DETAIL_COLUMNS = [
    "row_kind", "file", "digit", "speaker", "method", "target_fraction",
    "noise_multiple", "bytes", "achieved_fraction", "apen", "dtw", "seconds",
    "apen_mean", "apen_stderr", "dtw_mean", "dtw_stderr", "n_signals",
]


@dataclass
class BenchRow:
    row_kind: str
    file: str = ""
    digit: str = ""
    speaker: str = ""
    method: str = ""
    target_fraction: float = 0.0
    noise_multiple: float = 0.0
    bytes: int | str = ""
    achieved_fraction: float | str = ""
    apen: float | str = ""
    dtw: float | str = ""
    seconds: float | str = ""
    apen_mean: float | str = ""
    apen_stderr: float | str = ""
    dtw_mean: float | str = ""
    dtw_stderr: float | str = ""
    n_signals: int | str = ""


def _stable_seed(base_seed: int, name: str, noise_multiple: float, method: str) -> int:
    key = f"{base_seed}|{name}|{noise_multiple}|{method}".encode()
    return zlib.crc32(key)


def _paa_cost(n: int, window: int) -> int:
    count = math.ceil(n / window)
    cost = HEADER_SIZE + RAW_BYTES_PER_SAMPLE * count + varint_len(0)
    for _ in range(count - 1):
        cost += varint_len(window)
    return cost


def _dft_to_budget(signal: Signal, byte_budget: int) -> DftCompressed:
    # first-k (low-pass) selection, the SFA convention for Fourier
    # baselines; largest-magnitude remains available via dft_compress
    n = len(signal)
    k_max = n // 2 + 1
    best = None
    lo, hi = 1, k_max
    while lo <= hi:
        mid = (lo + hi) // 2
        cand = dft_compress(signal, mid, selection="first")
        if dft_wire_cost(cand) <= byte_budget:
            best = cand
            lo = mid + 1
        else:
            hi = mid - 1
    if best is None:
        raise BudgetInfeasibleError(f"byte budget {byte_budget} below one DFT coefficient")
    return best


def _paa_to_budget(signal: Signal, byte_budget: int):
    n = len(signal)
    for window in range(1, n + 1):
        if _paa_cost(n, window) <= byte_budget:
            return paa_compress(signal, window)
    raise BudgetInfeasibleError(f"byte budget {byte_budget} below one PAA window")


def _random_to_budget(signal: Signal, byte_budget: int, seed: int):
    n = len(signal)
    lo, hi, best = 2, n, None
    while lo <= hi:
        mid = (lo + hi) // 2
        cand = random_compress(signal, mid, seed)
        if wire_cost_of(cand) <= byte_budget:
            best, lo = cand, mid + 1
        else:
            hi = mid - 1
    if best is None:
        raise BudgetInfeasibleError(f"byte budget {byte_budget} below two points")
    return best


def compress_to_budget(signal: Signal, method: str, byte_budget: int, seed: int):
    """Compress with the named method to at most byte_budget bytes;
    returns (payload_bytes, reconstruction)."""
    if method == "tsc":
        comp = simplify(signal, Budget(BudgetKind.BYTES, byte_budget))
        return wire_cost_of(comp), reconstruct(comp)
    if method == "dft":
        comp = _dft_to_budget(signal, byte_budget)
        return dft_wire_cost(comp), dft_reconstruct(comp)
    if method == "paa":
        comp = _paa_to_budget(signal, byte_budget)
        return wire_cost_of(comp), paa_reconstruct(comp)
    if method == "random":
        comp = _random_to_budget(signal, byte_budget, seed)
        return wire_cost_of(comp), reconstruct(comp)
    raise ValueError(f"unknown method {method!r}")


def _parse_fsdd_name(name: str) -> tuple[str, str]:
    parts = Path(name).stem.split("_")
    if len(parts) == 3 and parts[0].isdigit():
        return parts[0], parts[1]
    return "", ""


def bench_one_file(
    path: str,
    methods: list[str],
    fractions: list[float],
    noise_multiples: list[float],
    seed: int,
) -> list[BenchRow]:
    name = Path(path).name
    digit, speaker = _parse_fsdd_name(name)
    original = standardize(read_signal(path))
    n = len(original)
    rows = []
    for nm in noise_multiples:
        noised = add_gaussian_noise(original, nm, _stable_seed(seed, name, nm, "noise"))
        for method in methods:
            for frac in fractions:
                byte_budget = int((1.0 - frac) * RAW_BYTES_PER_SAMPLE * n)
                t0 = time.perf_counter()
                payload, recon = compress_to_budget(
                    noised, method, byte_budget, _stable_seed(seed, name, nm, method)
                )
                elapsed = time.perf_counter() - t0
                rows.append(
                    BenchRow(
                        row_kind="detail",
                        file=name,
                        digit=digit,
                        speaker=speaker,
                        method=method,
                        target_fraction=frac,
                        noise_multiple=nm,
                        bytes=payload,
                        achieved_fraction=compression_fraction(n, payload),
                        apen=approx_entropy(recon, m=2, r=0.2),
                        dtw=dtw_distance(original, recon),
                        seconds=elapsed,
                    )
                )
    return rows


def aggregate(details: list[BenchRow]) -> list[BenchRow]:
    """Per-(method, fraction, noise) mean and standard error rows,
    recomputable exactly from the detail rows."""
    cells: dict[tuple, list[BenchRow]] = {}
    for row in details:
        cells.setdefault((row.method, row.target_fraction, row.noise_multiple), []).append(row)
    out = []
    for (method, frac, nm), members in sorted(cells.items()):
        apens = np.array([r.apen for r in members], dtype=np.float64)
        dtws = np.array([r.dtw for r in members], dtype=np.float64)
        k = len(members)
        stderr = lambda v: float(np.std(v, ddof=1) / math.sqrt(k)) if k > 1 else 0.0
        out.append(
            BenchRow(
                row_kind="aggregate",
                method=method,
                target_fraction=frac,
                noise_multiple=nm,
                apen_mean=float(apens.mean()),
                apen_stderr=stderr(apens),
                dtw_mean=float(dtws.mean()),
                dtw_stderr=stderr(dtws),
                n_signals=k,
            )
        )
    return out


def _worker(args):
    return bench_one_file(*args)


def run_bench(
    corpus_dir: str | Path,
    methods: list[str],
    fractions: list[float],
    noise_multiples: list[float],
    seed: int = 0,
    jobs: int = 1,
) -> list[BenchRow]:
    paths = sorted(
        str(p)
        for p in Path(corpus_dir).iterdir()
        if p.suffix.lower() in (".wav", ".csv")
    )
    if not paths:
        raise FileNotFoundError(f"no .wav or .csv signals in {corpus_dir}")
    tasks = [(p, methods, fractions, noise_multiples, seed) for p in paths]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_file = list(pool.map(_worker, tasks))
    else:
        per_file = [_worker(t) for t in tasks]
    details = [row for rows in per_file for row in rows]
    details.sort(
        key=lambda r: (r.file, r.noise_multiple, r.method, r.target_fraction)
    )
    return details + aggregate(details)


def write_rows(rows: list[BenchRow], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(DETAIL_COLUMNS)
        for row in rows:
            writer.writerow([getattr(row, col) for col in DETAIL_COLUMNS])


def read_rows(path: str | Path) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))

"""Topological signal compression: zero-dimensional persistence based
lossy compression to exact byte budgets, baseline compressors, metrics,
and a benchmark harness."""

from .baselines import (
    DftCompressed,
    dft_compress,
    dft_reconstruct,
    dft_wire_cost,
    paa_compress,
    paa_reconstruct,
    random_compress,
)
from .errors import (
    BudgetInfeasibleError,
    CorruptionError,
    DegenerateSignalError,
    FormatError,
    NothingToCancelError,
    TruncationError,
    TscError,
    UnsupportedChannelError,
)
from .io import read_csv, read_signal, read_wav, write_csv, write_wav
from .metrics import (
    add_gaussian_noise,
    approx_entropy,
    compression_fraction,
    dtw_distance,
    standardize,
)
from .persistence import (
    Criticality,
    PersistenceDiagram,
    PersistencePair,
    compute_diagram,
    critical_points,
)
from .signal import Budget, BudgetKind, CompressedSignal, Method, Signal
from .simplify import cancel_next, reconstruct, simplify, simplify_with_diagram
from .wire import decode_wire, encode_wire, wire_cost, wire_cost_of

__all__ = [name for name in dir() if not name.startswith("_")]

"""Topological compression: cancel low-persistence pairs down to a budget.

Kept points form a fixed priority order, so the kept set for a tighter
budget is always a subset of the kept set for a looser one:

  1. endpoints and the global min/max pair (never removed),
  2. the non-global pairs, highest persistence first,
  3. non-critical samples, ascending index (point budgets only).

Byte budgets consume whole pairs against the exact wire cost model.
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetInfeasibleError, NothingToCancelError
from .persistence import PersistenceDiagram, compute_diagram, critical_points
from .signal import Budget, BudgetKind, CompressedSignal, Method, Signal
from .wire import HEADER_SIZE, VALUE_SIZE, varint_len


def _mandatory_indices(diagram: PersistenceDiagram) -> set[int]:
    g = diagram.global_pair
    return {0, diagram.signal_length - 1, g.min_index, g.max_index}


def _pairs_descending(diagram: PersistenceDiagram):
    return list(reversed(diagram.nonglobal_sorted()))


def _kept_to_compressed(signal: Signal, kept: set[int]) -> CompressedSignal:
    idx = np.array(sorted(kept), dtype=np.int64)
    return CompressedSignal(
        idx, signal.values[idx], len(signal), signal.sample_rate_hz, Method.TSC
    )


class _CostTracker:
    """Incremental wire cost of a growing sorted index set."""

    def __init__(self, kept: set[int]):
        self.indices = sorted(kept)
        self.cost = HEADER_SIZE + len(self.indices) * VALUE_SIZE
        prev = 0
        for i in self.indices:
            self.cost += varint_len(i - prev)
            prev = i

    def cost_with(self, new: list[int]) -> int:
        """Cost after inserting the given indices (no mutation)."""
        merged = sorted(self.indices + new)
        cost = HEADER_SIZE + len(merged) * VALUE_SIZE
        prev = 0
        for i in merged:
            cost += varint_len(i - prev)
            prev = i
        return cost

    def add(self, new: list[int]) -> None:
        self.indices = sorted(self.indices + new)
        self.cost = self.cost_with([])


def simplify(signal: Signal, budget: Budget) -> CompressedSignal:
    """Compress a signal by cancelling lowest-persistence pairs first."""
    diagram = compute_diagram(signal)
    return simplify_with_diagram(signal, budget, diagram)


def simplify_with_diagram(
    signal: Signal, budget: Budget, diagram: PersistenceDiagram
) -> CompressedSignal:
    n = len(signal)
    mandatory = _mandatory_indices(diagram)
    pairs = _pairs_descending(diagram)

    if budget.kind is BudgetKind.PERSISTENCE_THRESHOLD:
        kept = set(mandatory)
        for p in pairs:
            if p.persistence >= budget.amount:
                kept.update((p.min_index, p.max_index))
        return _kept_to_compressed(signal, kept)

    if budget.kind is BudgetKind.COMPRESSION_FRACTION:
        k = int(round((1.0 - budget.amount) * n))
        budget = Budget(BudgetKind.POINTS, max(k, 2))

    if budget.kind is BudgetKind.POINTS:
        k = int(budget.amount)
        kept = set(mandatory)
        if len(kept) > k:
            raise BudgetInfeasibleError(
                f"point budget {k} is below the {len(kept)} mandatory points"
            )
        for p in pairs:
            new = {p.min_index, p.max_index} - kept
            if len(kept) + len(new) > k:
                break
            kept.update(new)
        else:
            # all pairs kept; top up with non-critical samples
            crit = {i for i, _ in critical_points(signal)}
            for i in range(n):
                if len(kept) >= k:
                    break
                if i not in crit and i not in kept:
                    kept.add(i)
        return _kept_to_compressed(signal, kept)

    if budget.kind is BudgetKind.BYTES:
        limit = int(budget.amount)
        tracker = _CostTracker(mandatory)
        if tracker.cost > limit:
            raise BudgetInfeasibleError(
                f"byte budget {limit} is below the minimal compression "
                f"({tracker.cost} bytes)"
            )
        kept = set(mandatory)
        for p in pairs:
            new = sorted({p.min_index, p.max_index} - kept)
            if not new:
                continue
            if tracker.cost_with(new) > limit:
                break
            tracker.add(new)
            kept.update(new)
        return _kept_to_compressed(signal, kept)

    raise ValueError(f"unsupported budget kind {budget.kind}")


def pinned_pairs(diagram: PersistenceDiagram):
    """Non-global pairs both of whose points are mandatory (an endpoint
    minimum killed at the global maximum). Such a dot cannot be cancelled
    by dropping points, since endpoints and the global pair always stay."""
    mandatory = _mandatory_indices(diagram)
    return [
        p
        for p in diagram.pairs
        if not p.is_global and p.min_index in mandatory and p.max_index in mandatory
    ]


def surviving_pairs(compressed: CompressedSignal, diagram: PersistenceDiagram):
    """Cancellable non-global pairs whose death maximum is still in the
    kept set, ascending cancellation order."""
    kept = set(compressed.indices.tolist())
    mandatory = _mandatory_indices(diagram)
    alive = []
    for p in diagram.nonglobal_sorted():
        removable = {p.min_index, p.max_index} - mandatory
        if removable and removable <= kept:
            alive.append(p)
    return alive


def cancel_next(
    compressed: CompressedSignal, diagram: PersistenceDiagram
) -> CompressedSignal:
    """Remove the surviving lowest-persistence pair's points; everything
    else is untouched."""
    if compressed.method is not Method.TSC:
        raise ValueError("cancel_next only applies to TSC compressions")
    alive = surviving_pairs(compressed, diagram)
    if not alive:
        raise NothingToCancelError("only the global pair remains")
    victim = alive[0]
    mandatory = _mandatory_indices(diagram)
    drop = {victim.min_index, victim.max_index} - mandatory
    kept = set(compressed.indices.tolist()) - drop
    idx = np.array(sorted(kept), dtype=np.int64)
    sel = np.searchsorted(compressed.indices, idx)
    return CompressedSignal(
        idx,
        compressed.values[sel],
        compressed.original_length,
        compressed.sample_rate_hz,
        compressed.method,
    )


def reconstruct(compressed: CompressedSignal) -> Signal:
    """Piecewise-linear interpolation through the kept points."""
    if len(compressed) < 2:
        raise ValueError("need at least 2 points to reconstruct")
    grid = np.arange(compressed.original_length)
    values = np.interp(grid, compressed.indices, compressed.values)
    return Signal(values, compressed.sample_rate_hz)

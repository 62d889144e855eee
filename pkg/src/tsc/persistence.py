"""Zero-dimensional persistence of a sampled signal.

Components are swept in from below: each local minimum starts a component,
each interior local maximum merges two components and kills the younger
one (elder rule). The global minimum is paired with the global maximum by
convention. All value comparisons are lexicographic on (value, index), so
tied values never produce ambiguous output: within a plateau the leftmost
sample acts as the minimum-side representative and the rightmost as the
maximum-side one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .signal import Signal


class Criticality(enum.Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class PersistencePair:
    """One diagram dot: a birth at a local minimum killed at a local maximum."""

    birth_value: float
    death_value: float
    min_index: int
    max_index: int
    is_global: bool = False

    def __post_init__(self):
        if self.death_value < self.birth_value:
            raise ValueError("death below birth")

    @property
    def persistence(self) -> float:
        return self.death_value - self.birth_value


@dataclass(frozen=True)
class PersistenceDiagram:
    pairs: tuple[PersistencePair, ...]
    signal_length: int

    @property
    def global_pair(self) -> PersistencePair:
        return next(p for p in self.pairs if p.is_global)

    def nonglobal_sorted(self) -> list[PersistencePair]:
        """Non-global pairs in ascending cancellation order."""
        return sorted(
            (p for p in self.pairs if not p.is_global),
            key=lambda p: (p.persistence, p.min_index),
        )

    def to_csv_rows(self) -> list[str]:
        """Rows for the diagram CSV export, sorted by persistence descending."""
        header = "birth,death,min_index,max_index,is_global"
        ordered = sorted(self.pairs, key=lambda p: (-p.persistence, p.min_index))
        rows = [
            f"{p.birth_value!r},{p.death_value!r},{p.min_index},{p.max_index},{int(p.is_global)}"
            for p in ordered
        ]
        return [header] + rows


def critical_points(signal: Signal) -> list[tuple[int, Criticality]]:
    """Local extrema in index order, kinds strictly alternating.

    Both endpoints are included as one-sided extrema. Ties are broken by
    index, so a constant run reads as strictly rising left to right.
    """
    f = signal.values
    n = len(f)
    # rising[i]: does the (value, index) order increase from i to i+1?
    rising = (f[1:] > f[:-1]) | (f[1:] == f[:-1])

    out: list[tuple[int, Criticality]] = []
    out.append((0, Criticality.MIN if rising[0] else Criticality.MAX))
    for i in range(1, n - 1):
        if rising[i - 1] and not rising[i]:
            out.append((i, Criticality.MAX))
        elif not rising[i - 1] and rising[i]:
            out.append((i, Criticality.MIN))
    out.append((n - 1, Criticality.MAX if rising[n - 2] else Criticality.MIN))
    return out


def compute_diagram(signal: Signal) -> PersistenceDiagram:
    """Union-find sublevel sweep in O(n log n)."""
    f = signal.values
    n = len(f)
    order = np.lexsort((np.arange(n), f))  # ascending (value, index)

    parent = np.full(n, -1, dtype=np.int64)  # -1 = not yet activated
    # birth[root]: index of the component's minimum
    birth = np.empty(n, dtype=np.int64)

    def find(i: int) -> int:
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def older(a: int, b: int) -> bool:
        return (f[a], a) < (f[b], b)

    pairs: list[PersistencePair] = []
    for i in order:
        parent[i] = i
        birth[i] = i
        left_active = i > 0 and parent[i - 1] != -1
        right_active = i < n - 1 and parent[i + 1] != -1
        if left_active and right_active:
            ra, rb = find(i - 1), find(i + 1)
            # ra != rb always: the two sides can only connect through i
            elder, younger = (ra, rb) if older(birth[ra], birth[rb]) else (rb, ra)
            pairs.append(
                PersistencePair(
                    birth_value=float(f[birth[younger]]),
                    death_value=float(f[i]),
                    min_index=int(birth[younger]),
                    max_index=int(i),
                )
            )
            parent[younger] = elder
            parent[i] = elder
        elif left_active:
            parent[i] = find(i - 1)
        elif right_active:
            parent[i] = find(i + 1)

    g_min = int(order[0])
    g_max = int(order[-1])
    pairs.append(
        PersistencePair(
            birth_value=float(f[g_min]),
            death_value=float(f[g_max]),
            min_index=g_min,
            max_index=g_max,
            is_global=True,
        )
    )
    return PersistenceDiagram(tuple(pairs), signal_length=n)

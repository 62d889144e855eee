import numpy as np

from tsc import Signal


def check_mcl(diagram, tau, recon_diagram, n):
    """The cancellation guarantee, stated in the form that is actually
    provable when endpoints and the global pair are never droppable.

    Every surviving dot (persistence >= tau) and the global pair must
    appear exactly. Extra dots are only allowed as artifacts of the
    undroppable points: born at a signal endpoint or dying at the global
    maximum, always with persistence < tau. When no cancelled pair
    touches an undroppable point, equality must be exact.
    """
    g = diagram.global_pair
    mandatory = {0, n - 1, g.min_index, g.max_index}
    expected = {
        (p.birth_value, p.death_value, p.min_index, p.max_index, p.is_global)
        for p in diagram.pairs
        if p.is_global or p.persistence >= tau
    }
    got = {
        (p.birth_value, p.death_value, p.min_index, p.max_index, p.is_global)
        for p in recon_diagram.pairs
    }
    assert expected <= got, f"lost surviving dots: {expected - got}"
    for birth, death, min_idx, max_idx, _ in got - expected:
        assert death - birth < tau, "artifact dot at or above the cutoff"
        assert min_idx in (0, n - 1) or max_idx == g.max_index
    cancelled = [p for p in diagram.pairs if not p.is_global and p.persistence < tau]
    if not any({p.min_index, p.max_index} & mandatory for p in cancelled):
        assert got == expected


def distinct_signal(rng: np.random.Generator, n: int) -> Signal:
    """Random signal of length n with all-distinct values."""
    values = rng.permutation(n).astype(np.float64) + rng.uniform(0, 0.5, size=n)
    while len(set(values.tolist())) != n:  # pragma: no cover - vanishingly rare
        values = rng.permutation(n).astype(np.float64) + rng.uniform(0, 0.5, size=n)
    return Signal(values, sample_rate_hz=1.0)

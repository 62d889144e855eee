import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from tsc import Signal, compute_diagram, critical_points
from tsc.persistence import Criticality

from helpers import distinct_signal
from oracles import diagram_oracle, diagram_to_set

MIN = Criticality.MIN
MAX = Criticality.MAX


def sig(*values):
    return Signal(np.array(values, dtype=np.float64), 1.0)


class TestCriticalPoints:
    def test_monotone_ramp(self):
        assert critical_points(sig(1, 2, 3, 4)) == [(0, MIN), (3, MAX)]

    def test_zigzag(self):
        # hand oracle: sign changes of first differences
        assert critical_points(sig(0, 2, 1, 3)) == [
            (0, MIN), (1, MAX), (2, MIN), (3, MAX),
        ]

    def test_constant_plateau(self):
        # index tie-break reads a constant run as strictly rising
        assert critical_points(sig(1, 1, 1)) == [(0, MIN), (2, MAX)]

    def test_descending_ramp(self):
        assert critical_points(sig(4, 2, 1)) == [(0, MAX), (2, MIN)]

    def test_interior_min_plateau_leftmost(self):
        pts = critical_points(sig(3, 0, 0, 3))
        assert (1, MIN) in pts

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(min_value=-50, max_value=50), min_size=2, max_size=40))
    def test_alternation_and_endpoints(self, values):
        pts = critical_points(sig(*values))
        indices = [i for i, _ in pts]
        kinds = [k for _, k in pts]
        assert indices[0] == 0 and indices[-1] == len(values) - 1
        assert indices == sorted(set(indices))
        for a, b in zip(kinds, kinds[1:]):
            assert a != b


class TestComputeDiagram:
    def test_monotone_single_global_pair(self):
        d = compute_diagram(sig(1, 2, 3, 4))
        assert len(d.pairs) == 1
        g = d.global_pair
        assert (g.birth_value, g.death_value) == (1.0, 4.0)
        assert (g.min_index, g.max_index) == (0, 3)

    def test_zigzag_pairs(self):
        # brute-force oracle agrees: {(1, 2) at indices (2, 1); (0, 3) global}
        d = compute_diagram(sig(0, 2, 1, 3))
        assert diagram_to_set(d) == {(1.0, 2.0, 2, 1, False), (0.0, 3.0, 0, 3, True)}
        assert diagram_to_set(d) == diagram_oracle([0, 2, 1, 3])

    def test_eight_point_two_dot_shape(self):
        # two local minima and two local maxima -> exactly two dots,
        # with the global dot spanning (min value, max value)
        values = [3, 1, 2, 4, 6, 5, 7, 8]
        d = compute_diagram(sig(*values))
        assert len(d.pairs) == 2
        g = d.global_pair
        assert g.birth_value == min(values) and g.death_value == max(values)

    def test_exactly_one_global(self):
        d = compute_diagram(sig(3, 1, 4, 1.5, 5, 0.5, 9, 2))
        assert sum(p.is_global for p in d.pairs) == 1

    def test_tie_break_deterministic(self):
        a = compute_diagram(sig(1, 3, 1, 3, 1))
        b = compute_diagram(sig(1, 3, 1, 3, 1))
        assert diagram_to_set(a) == diagram_to_set(b)

    @settings(max_examples=300, deadline=None)
    @given(st.integers(min_value=0, max_value=2**31 - 1), st.integers(4, 64))
    def test_oracle_equivalence(self, seed, n):
        signal = distinct_signal(np.random.default_rng(seed), n)
        assert diagram_to_set(compute_diagram(signal)) == diagram_oracle(signal.values)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=2**31 - 1), st.integers(4, 64))
    def test_dot_count_and_value_sums(self, seed, n):
        signal = distinct_signal(np.random.default_rng(seed), n)
        d = compute_diagram(signal)
        pts = critical_points(signal)
        minima = [i for i, k in pts if k is MIN]
        maxima_vals = {signal.values[i] for i, k in pts if k is MAX}
        assert len(d.pairs) == len(minima)
        assert sorted(p.birth_value for p in d.pairs) == sorted(
            signal.values[i] for i in minima
        )
        for p in d.pairs:
            assert p.death_value in maxima_vals

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=2**31 - 1), st.integers(4, 48))
    def test_index_uniqueness(self, seed, n):
        signal = distinct_signal(np.random.default_rng(seed), n)
        d = compute_diagram(signal)
        mins = [p.min_index for p in d.pairs]
        assert len(mins) == len(set(mins))
        # max indices are unique except that an interior global maximum
        # necessarily doubles as the final merge's death location
        maxs = [p.max_index for p in d.pairs if not p.is_global]
        assert len(maxs) == len(set(maxs))
        g = d.global_pair
        if g.max_index in maxs:
            assert 0 < g.max_index < len(signal) - 1

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=2**31 - 1), st.integers(4, 48))
    def test_nested_adjacency(self, seed, n):
        # cancelling pairs in ascending persistence order, each pair's
        # critical points are adjacent in the surviving critical sequence
        signal = distinct_signal(np.random.default_rng(seed), n)
        d = compute_diagram(signal)
        sequence = [i for i, _ in critical_points(signal)]
        for p in d.nonglobal_sorted():
            a, b = sorted((p.min_index, p.max_index))
            ia, ib = sequence.index(a), sequence.index(b)
            assert ib == ia + 1
            sequence.remove(a)
            sequence.remove(b)

    def test_padding_monotone_ramp_keeps_diagram(self):
        base = [0.0, 2.0, 1.0, 3.0]
        padded = [0.0, 0.5, 2.0, 1.0, 3.0]  # extra sample on the rising edge
        da = compute_diagram(sig(*base))
        db = compute_diagram(sig(*padded))
        assert {(p.birth_value, p.death_value, p.is_global) for p in da.pairs} == {
            (p.birth_value, p.death_value, p.is_global) for p in db.pairs
        }


class TestCsvExport:
    def test_rows_sorted_by_persistence_descending(self):
        rows = compute_diagram(sig(0, 2, 1, 3)).to_csv_rows()
        assert rows[0] == "birth,death,min_index,max_index,is_global"
        assert rows[1].endswith(",1")  # global pair (persistence 3) first
        persistences = []
        for row in rows[1:]:
            birth, death, *_ = row.split(",")
            persistences.append(float(death) - float(birth))
        assert persistences == sorted(persistences, reverse=True)

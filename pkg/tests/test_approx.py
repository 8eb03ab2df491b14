from fractions import Fraction

import pytest
from hypothesis import given, settings

from pdskit import (
    Disconnected,
    Graph,
    GraphTooSmall,
    InstanceTooLarge,
    InvalidSubsetSize,
    KOutOfRange,
    VertexSet,
    all_connected_graphs,
    approx_ratio_bound,
    check_pds,
    decide_pds_at_least_k,
    half_pds,
    max_pds_exact,
)
from pdskit.errors import NoPds

from .strategies import graphs

K4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


class TestHalfPds:
    def test_k4_fixed_point(self):
        # {0,1} already satisfies the density condition, so no move happens
        s, trace = half_pds(K4, init=VertexSet.from_ids(4, [0, 1]))
        assert s == VertexSet.from_ids(4, [0, 1])
        assert trace.iterations == 0
        assert trace.initial == trace.final == s

    def test_default_start_is_prefix(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        _, trace = half_pds(g)
        assert trace.initial == VertexSet.from_ids(5, [0, 1, 2])

    def test_seeded_start_is_deterministic(self):
        g = Graph(7, [(v, (v + 1) % 7) for v in range(7)])
        a = half_pds(g, seed=11)
        b = half_pds(g, seed=11)
        assert a[0] == b[0] and a[1].initial == b[1].initial

    def test_init_size_enforced(self):
        with pytest.raises(InvalidSubsetSize):
            half_pds(K4, init=VertexSet.from_ids(4, [0, 1, 2]))
        with pytest.raises(InvalidSubsetSize):
            half_pds(K4, init=VertexSet.from_ids(5, [0, 1]))

    def test_small_and_disconnected_rejected(self):
        with pytest.raises(GraphTooSmall):
            half_pds(Graph(2, [(0, 1)]))
        with pytest.raises(Disconnected):
            half_pds(Graph(4, [(0, 1), (2, 3)]))

    def test_exceptional_cubic_caps_at_half(self):
        # the 8-vertex exceptions have no PDS above 4, so the search must
        # come back with exactly ceil(n/2) vertices, never the +1
        from pdskit import fixture

        g = fixture("exc8_paired").graph
        s, _ = half_pds(g)
        assert len(s) == 4 and check_pds(g, s).holds

    def test_trace_is_internally_consistent(self):
        g = Graph(9, [(v, w) for v in range(9) for w in range(v + 1, 9)
                      if (v + w) % 3 != 1])
        s, trace = half_pds(g, seed=3)
        cut = None
        for mv in trace.moves:
            assert mv.cut_after == mv.cut_before - (mv.outside_degree - mv.inside_degree)
            if cut is not None:
                assert mv.cut_before == cut
            cut = mv.cut_after
        assert trace.final == s

    def test_cut_bounds_move_count(self):
        import random

        from pdskit import random_connected

        for seed in range(20):
            rng = random.Random(seed)
            n = rng.randint(4, 40)
            m = rng.randint(n - 1, n * (n - 1) // 2)
            g = random_connected(n, m, seed=seed)
            _, trace = half_pds(g, seed=seed)
            assert trace.iterations <= 2 * g.m + 1

    @given(graphs(min_n=3, max_n=9, connected=True))
    @settings(max_examples=120, deadline=None)
    def test_output_contract(self, g):
        s, trace = half_pds(g)
        half = (g.n + 1) // 2
        assert len(s) in (half, half + 1)
        assert check_pds(g, s).holds


class TestRatioBound:
    def test_values(self):
        assert approx_ratio_bound(K4) == Fraction(3, 2)
        star = Graph(6, [(0, v) for v in range(1, 6)])
        assert approx_ratio_bound(star) == Fraction(5, 3)

    def test_star_is_tight(self):
        # optimum n-1 versus guaranteed ceil(n/2): the bound is met exactly
        star = Graph(8, [(0, v) for v in range(1, 8)])
        opt = max_pds_exact(star).size
        s, _ = half_pds(star)
        assert Fraction(opt, len(s)) == approx_ratio_bound(star)


class TestDecide:
    def test_small_k_always_true(self):
        g = Graph(6, [(v, (v + 1) % 6) for v in range(6)])
        assert decide_pds_at_least_k(g, 2)
        assert decide_pds_at_least_k(g, 3)

    def test_large_k_matches_exact(self):
        for n in range(3, 7):
            for g in all_connected_graphs(n):
                try:
                    opt = max_pds_exact(g).size
                except NoPds:
                    opt = 1
                for k in range(2, g.n):
                    assert decide_pds_at_least_k(g, k) == (opt >= k)

    def test_k_range_enforced(self):
        with pytest.raises(KOutOfRange):
            decide_pds_at_least_k(K4, 1)
        with pytest.raises(KOutOfRange):
            decide_pds_at_least_k(K4, 4)

    def test_cap_applies_only_beyond_half(self):
        g = Graph(7, [(v, (v + 1) % 7) for v in range(7)])
        assert decide_pds_at_least_k(g, 3, cap=5)  # local search, no cap needed
        with pytest.raises(InstanceTooLarge):
            decide_pds_at_least_k(g, 5, cap=5)

from fractions import Fraction

import pytest
from hypothesis import given

from pdskit import (
    Graph,
    InvalidSubsetSize,
    NotAPds,
    NotMember,
    VertexSet,
    check_pds,
    is_inclusionwise_maximal,
    is_satisfied,
    pds_size_upper_bound,
)

from .strategies import graphs_with_subset

K4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


class TestCheckPds:
    def test_k4_pair_is_pds(self):
        # 2 >= n/2 fails the naive intuition: {0,1} satisfies 1/1 >= 3/3
        assert check_pds(K4, VertexSet.from_ids(4, [0, 1])).holds

    def test_k4_triple_is_pds(self):
        assert check_pds(K4, VertexSet.from_ids(4, [0, 1, 2])).holds

    def test_path_endpoints_fail(self):
        verdict = check_pds(P4, VertexSet.from_ids(4, [0, 3]))
        assert not verdict.holds
        assert verdict.unsatisfied == ((0, 0, 1), (3, 0, 1))

    def test_path_adjacent_pair(self):
        # {1,2}: each has 1 inside / 1 outside; 1/1 >= 1/2 holds
        assert check_pds(P4, VertexSet.from_ids(4, [1, 2])).holds

    def test_c5_consecutive_triple(self):
        assert check_pds(C5, VertexSet.from_ids(5, [0, 1, 2])).holds

    def test_size_limits(self):
        with pytest.raises(InvalidSubsetSize):
            check_pds(K4, VertexSet.from_ids(4, [0]))
        with pytest.raises(InvalidSubsetSize):
            check_pds(K4, K4.full_set())
        with pytest.raises(InvalidSubsetSize):
            check_pds(K4, VertexSet.from_ids(5, [0, 1]))

    @given(graphs_with_subset(connected=False))
    def test_matches_fraction_definition(self, gs):
        g, s = gs
        flags = s.flags()
        verdict = check_pds(g, s)
        bad = []
        for u in s.members():
            d_in = sum(1 for w in g.adj[u] if flags[w])
            inside = Fraction(d_in, len(s) - 1) if len(s) > 1 else Fraction(0)
            total = Fraction(g.deg[u], g.n - 1)
            if inside < total:
                bad.append((u, d_in, g.deg[u] - d_in))
        assert verdict.holds == (not bad)
        assert list(verdict.unsatisfied) == bad

    @given(graphs_with_subset(connected=False))
    def test_is_satisfied_agrees(self, gs):
        g, s = gs
        verdict = check_pds(g, s)
        unsat = {u for u, _, _ in verdict.unsatisfied}
        for u in s.members():
            assert is_satisfied(g, s, u) == (u not in unsat)

    def test_is_satisfied_requires_membership(self):
        with pytest.raises(NotMember):
            is_satisfied(P4, VertexSet.from_ids(4, [1, 2]), 0)


class TestUpperBound:
    def test_values(self):
        assert pds_size_upper_bound(K4) == 3  # (4*2+1)//3
        assert pds_size_upper_bound(P4) == 2  # (4*1+1)//2
        assert pds_size_upper_bound(C5) == 3  # (5*1+1)//2

    def test_cubic_formula(self):
        # degree-3 graphs: bound collapses to floor((2n+1)/3)
        for n in (4, 6, 8, 10):
            cycle = [(v, (v + 1) % n) for v in range(n)]
            chords = [(v, v + n // 2) for v in range(n // 2)]
            g = Graph(n, cycle + chords)
            assert pds_size_upper_bound(g) == (2 * n + 1) // 3


class TestMaximality:
    def test_k4_triple_maximal(self):
        assert is_inclusionwise_maximal(K4, VertexSet.from_ids(4, [0, 1, 2]))

    def test_k4_pair_not_maximal(self):
        assert not is_inclusionwise_maximal(K4, VertexSet.from_ids(4, [0, 1]))

    def test_rejects_non_pds(self):
        with pytest.raises(NotAPds):
            is_inclusionwise_maximal(P4, VertexSet.from_ids(4, [0, 3]))

import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdskit import (
    Disconnected,
    Graph,
    IsStar,
    KOutOfRange,
    NotAPds,
    NotIndependent,
    ParseError,
    SizeBelowThreshold,
    VertexSet,
    bipartite_reduction,
    certificate_from_json,
    certificate_to_json,
    check_pds,
    is_bipartite,
    is_split,
    max_independent_set_exact,
    max_pds_exact,
    split_reduction,
    verify_certificate,
)
from pdskit.reductions import ReductionCertificate

from .strategies import graphs

TRIANGLE = Graph(3, [(0, 1), (0, 2), (1, 2)])
DEMO5 = Graph(5, [(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)])


def independent_sets(g, max_size=None):
    cap = g.n if max_size is None else max_size
    for size in range(0, cap + 1):
        for ids in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(ids, 2)):
                yield VertexSet.from_ids(g.n, ids)


class TestSplitStructure:
    def test_block_layout(self):
        inst = split_reduction(DEMO5)
        assert inst.target.n == DEMO5.m + DEMO5.n + 2
        assert inst.anchors == (0, 1)
        assert sorted(inst.edge_ids.values()) == list(range(2, 2 + DEMO5.m))
        assert inst.source_ids == tuple(range(8, 13))
        assert inst.core_size == DEMO5.m + 2

    def test_target_is_split(self):
        assert is_split(split_reduction(DEMO5).target)

    def test_clique_and_attachment(self):
        inst = split_reduction(TRIANGLE)
        t = inst.target
        clique = [0, 1] + sorted(inst.edge_ids.values())
        for u, v in combinations(clique, 2):
            assert t.has_edge(u, v)
        # an edge vertex sees exactly the sources off its endpoints
        for (u, v), eid in inst.edge_ids.items():
            for w in range(TRIANGLE.n):
                expect = w not in (u, v)
                assert t.has_edge(eid, inst.source_ids[w]) == expect
        # the source block is independent and avoids the anchors
        for w, x in combinations(inst.source_ids, 2):
            assert not t.has_edge(w, x)
        for w in inst.source_ids:
            assert not t.has_edge(0, w) and not t.has_edge(1, w)

    def test_rejects_stars_and_disconnected(self):
        with pytest.raises(IsStar):
            split_reduction(Graph(4, [(0, 1), (0, 2), (0, 3)]))
        with pytest.raises(Disconnected):
            split_reduction(Graph(4, [(0, 1), (2, 3)]))


class TestSplitTransfer:
    def test_embed_is_always_a_pds(self):
        inst = split_reduction(DEMO5)
        for is_set in independent_sets(DEMO5):
            s = inst.embed_independent_set(is_set)
            assert len(s) == inst.core_size + len(is_set)
            assert check_pds(inst.target, s).holds

    def test_embed_rejects_dependent_sets(self):
        inst = split_reduction(DEMO5)
        with pytest.raises(NotIndependent):
            inst.embed_independent_set(VertexSet.from_ids(5, [0, 1]))

    def test_optimum_correspondence(self):
        inst = split_reduction(DEMO5)
        alpha, _ = max_independent_set_exact(DEMO5)
        res = max_pds_exact(inst.target)
        assert res.size == inst.core_size + alpha

    def test_extract_roundtrip(self):
        inst = split_reduction(DEMO5)
        alpha, best = max_independent_set_exact(DEMO5)
        out = inst.extract_independent_set(inst.embed_independent_set(best))
        assert out == best

    def test_normalize_repairs_missing_edge_vertex(self):
        # a PDS that skips edge vertex (1,2) but keeps both endpoint sources:
        # normalization must pull the core in and evict one endpoint
        inst = split_reduction(TRIANGLE)
        eid = inst.edge_ids[(1, 2)]
        others = [i for i in range(inst.core_size) if i != eid]
        s = VertexSet.from_ids(
            inst.target.n, others + [inst.source_ids[1], inst.source_ids[2]]
        )
        assert check_pds(inst.target, s).holds
        fixed = inst.normalize_pds(s)
        assert len(fixed) == len(s)
        assert check_pds(inst.target, fixed).holds
        assert all(v in fixed for v in range(inst.core_size))
        out = inst.extract_independent_set(s)
        assert len(out) == len(s) - inst.core_size == 1

    def test_normalize_rejects_non_pds(self):
        inst = split_reduction(TRIANGLE)
        with pytest.raises(NotAPds):
            inst.normalize_pds(VertexSet.from_ids(inst.target.n, [6, 7]))


class TestBipartiteStructure:
    def test_block_layout(self):
        inst = bipartite_reduction(DEMO5, 3)
        n, m, k = DEMO5.n, DEMO5.m, 3
        assert inst.filler_count == m * (n - k - 1) - k + 1 == 4
        assert inst.target.n == inst.filler_count + m + n == 15
        assert inst.threshold == inst.filler_count + m + k == 13
        assert is_bipartite(inst.target)

    def test_size_identity_holds_for_all_k(self):
        for k in range(1, DEMO5.n - 1):
            inst = bipartite_reduction(DEMO5, k)
            ell, n, m = inst.filler_count, DEMO5.n, DEMO5.m
            assert (ell + k - 1) * (n - k) == (n - k - 1) * (ell + m + k - 1)

    def test_k_range(self):
        for k in (0, DEMO5.n - 1, -2):
            with pytest.raises(KOutOfRange):
                bipartite_reduction(DEMO5, k)

    def test_adjacency(self):
        inst = bipartite_reduction(TRIANGLE, 1)
        t = inst.target
        for f in range(inst.filler_count):
            for eid in inst.edge_ids.values():
                assert t.has_edge(f, eid)
        for (u, v), eid in inst.edge_ids.items():
            for w in range(TRIANGLE.n):
                assert t.has_edge(eid, inst.source_ids[w]) == (w not in (u, v))


class TestBipartiteTransfer:
    def test_embed_needs_k_vertices(self):
        inst = bipartite_reduction(DEMO5, 3)
        with pytest.raises(SizeBelowThreshold):
            inst.embed_independent_set(VertexSet.from_ids(5, [0, 2]))

    def test_embed_reaches_threshold(self):
        inst = bipartite_reduction(DEMO5, 3)
        _, best = max_independent_set_exact(DEMO5)
        s = inst.embed_independent_set(best)
        assert len(s) >= inst.threshold
        assert check_pds(inst.target, s).holds

    def test_extract_roundtrip(self):
        inst = bipartite_reduction(DEMO5, 2)
        _, best = max_independent_set_exact(DEMO5)
        out = inst.extract_independent_set(inst.embed_independent_set(best))
        assert out == best
        assert len(out) >= 2

    def test_normalize_enforces_threshold(self):
        inst = bipartite_reduction(DEMO5, 3)
        small = VertexSet.from_ids(inst.target.n, range(2, 6))
        with pytest.raises((SizeBelowThreshold, NotAPds)):
            inst.normalize_pds(small)


class TestCertificates:
    def _forward(self, kind, k=None):
        g = DEMO5
        inst = split_reduction(g) if kind == "split" else bipartite_reduction(g, k)
        _, best = max_independent_set_exact(g)
        return inst, ReductionCertificate(
            kind=kind,
            direction="forward",
            k=k,
            independent_set=best,
            pds=inst.embed_independent_set(best),
        )

    def test_valid_split(self):
        inst, cert = self._forward("split")
        assert verify_certificate(inst, cert) == []

    def test_valid_bipartite(self):
        inst, cert = self._forward("bipartite", k=3)
        assert verify_certificate(inst, cert) == []

    def test_tampered_set_is_caught(self):
        inst, cert = self._forward("split")
        bad = ReductionCertificate(
            kind=cert.kind,
            direction=cert.direction,
            k=None,
            independent_set=VertexSet.from_ids(5, [0, 1]),
            pds=cert.pds,
        )
        problems = verify_certificate(inst, bad)
        assert any("independent" in p for p in problems)

    def test_tampered_pds_is_caught(self):
        inst, cert = self._forward("bipartite", k=3)
        bad = ReductionCertificate(
            kind=cert.kind,
            direction=cert.direction,
            k=3,
            independent_set=cert.independent_set,
            pds=VertexSet.from_ids(inst.target.n, range(2, 8)),
        )
        assert verify_certificate(inst, bad) != []

    def test_json_roundtrip(self):
        inst, cert = self._forward("bipartite", k=2)
        obj = certificate_to_json(inst, cert)
        text = json.dumps(obj)
        inst2, cert2 = certificate_from_json(json.loads(text))
        assert inst2.target == inst.target
        assert cert2.independent_set == cert.independent_set
        assert cert2.pds == cert.pds
        assert verify_certificate(inst2, cert2) == []

    def test_malformed_json_rejected(self):
        with pytest.raises(ParseError):
            certificate_from_json({"kind": "split"})
        with pytest.raises(ParseError):
            certificate_from_json({"kind": "nonsense", "direction": "forward"})


@given(graphs(min_n=3, max_n=6, connected=True), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_split_embed_property(g, rnd):
    from pdskit.graph import is_star

    if is_star(g):
        return
    inst = split_reduction(g)
    # greedy independent set in random order
    order = list(range(g.n))
    rnd.shuffle(order)
    chosen: list[int] = []
    for v in order:
        if all(not g.has_edge(v, w) for w in chosen):
            chosen.append(v)
    s = inst.embed_independent_set(VertexSet.from_ids(g.n, chosen))
    assert check_pds(inst.target, s).holds
    assert inst.extract_independent_set(s) == VertexSet.from_ids(g.n, chosen)

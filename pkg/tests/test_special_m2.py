from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from conftest import small_hypergraphs
from isobench import (
    Hypergraph,
    check_min_cardinality_reduction,
    count_isolating,
    edge_mask,
    edge_vertices,
    explicit_objective,
    identity_objective,
    min_cardinality_subgraph,
    min_vertex_cover,
    random_uniform_hypergraph,
    rich_edge_report,
    singleton_hypergraph,
    special_isolating_weights,
)


def H(n, *edges, **kw):
    return Hypergraph.from_edges(n, edges, **kw)


class TestSpecialWeights:
    def test_singleton_pair(self):
        assert special_isolating_weights(singleton_hypergraph(2)) == [(1, 2), (2, 1)]

    def test_single_edge_counts(self):
        assert len(special_isolating_weights(H(3, [1, 2]))) == 5
        assert len(special_isolating_weights(H(2, [1, 2]))) == 4

    def test_empty_hypergraph_convention(self):
        assert len(special_isolating_weights(Hypergraph(2, ()))) == 4

    def test_single_edge_formula(self):
        for n in range(1, 9):
            for r in range(1, n + 1):
                h = H(n, list(range(1, r + 1)))
                got = len(special_isolating_weights(h))
                assert got == 2**r + 2 ** (n - r) - 1, (n, r)

    @given(small_hypergraphs(max_n=4))
    @settings(max_examples=80, deadline=None)
    def test_matches_definition_oracle(self, h):
        vsets = [list(edge_vertices(e)) for e in h.edges]
        assert special_isolating_weights(h) == sorted(oracle.special_weights(h.n, vsets))


class TestMinCardinalitySubgraph:
    def test_examples(self):
        r, hr = min_cardinality_subgraph(H(3, [1], [2, 3]))
        assert r == 1 and hr.vertex_sets() == ((1,),)
        r, hr = min_cardinality_subgraph(singleton_hypergraph(3))
        assert hr == singleton_hypergraph(3)
        r, hr = min_cardinality_subgraph(H(5, [1, 2], [3, 4], [1, 3, 5]))
        assert r == 2 and hr.vertex_sets() == ((1, 2), (3, 4))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            min_cardinality_subgraph(Hypergraph(2, ()))


class TestMinCardinalityReduction:
    def test_mixed_cardinalities(self):
        assert check_min_cardinality_reduction(H(3, [1], [2, 3]), identity_objective(2)).holds

    def test_uniform(self):
        f = explicit_objective([Fraction(1, 3), Fraction(7, 2)])
        assert check_min_cardinality_reduction(H(4, [1, 2], [3, 4], [1, 3]), f).holds

    def test_empty_vacuous(self):
        chk = check_min_cardinality_reduction(Hypergraph(2, ()), identity_objective(2))
        assert chk.holds and chk.special_count == 4

    def test_requires_M2(self):
        with pytest.raises(ValueError):
            check_min_cardinality_reduction(singleton_hypergraph(2), identity_objective(3))

    @given(small_hypergraphs(max_n=4), st.data())
    @settings(max_examples=60, deadline=None)
    def test_subset_relation_under_random_objectives(self, h, data):
        from conftest import increasing_objectives

        f = data.draw(increasing_objectives(2))
        assert check_min_cardinality_reduction(h, f).holds


class TestMinVertexCover:
    def test_examples(self):
        assert min_vertex_cover(H(4, [3, 4])) == (3,)
        assert min_vertex_cover(H(2, [1], [2])) == (1, 2)
        assert min_vertex_cover(H(3, [1, 2], [2, 3])) == (2,)
        assert min_vertex_cover(Hypergraph(3, ())) == ()

    def test_empty_edge_rejected(self):
        g = Hypergraph(2, (0, 1), allow_empty_edge=True, require_inclusion_free=False)
        with pytest.raises(ValueError, match="empty edge"):
            min_vertex_cover(g)

    @given(small_hypergraphs(max_n=5))
    @settings(max_examples=80, deadline=None)
    def test_minimum_and_lex_smallest(self, h):
        if not h.edges:
            return
        vsets = [edge_vertices(e) for e in h.edges]
        size, covers = oracle.minimum_covers(h.n, vsets)
        got = min_vertex_cover(h)
        assert len(got) == size
        assert got == min(covers)


class TestRichEdgeReport:
    def test_two_disjoint_edges(self):
        rep = rich_edge_report(H(4, [1, 2], [3, 4]))
        assert rep.total_special == 10
        for er in rep.edges:
            assert er.rich
            assert (len(er.cover1), len(er.cover2)) == (1, 1)
            assert er.s_lower == 3
            assert er.s_exact >= er.s_lower

    def test_single_edge(self):
        rep = rich_edge_report(H(2, [1, 2]))
        er = rep.edges[0]
        assert (er.cover1, er.cover2) == ((), ())
        assert er.s_lower == 2 ** (2 - 2 - 0) + 2 ** (2 - 0) - 1 == 4
        assert er.s_exact == rep.total_special == 4

    def test_singleton_pair(self):
        rep = rich_edge_report(singleton_hypergraph(2))
        for er in rep.edges:
            assert len(er.cover2) == 1
            assert er.s_exact == 1

    def test_swap_indicators(self):
        rep = rich_edge_report(H(3, [1, 2], [1, 3]))
        by_edge = {er.edge: er for er in rep.edges}
        er = by_edge[edge_mask([1, 2], 3)]
        swaps = {(i, j): v for i, j, v in er.swaps}
        # {1,2} xor {2,3} = {1,3} which is an edge
        assert swaps[(2, 3)] == 1
        assert swaps[(1, 3)] == 0

    def test_rejects_non_uniform(self):
        with pytest.raises(ValueError, match="uniform"):
            rich_edge_report(H(3, [1], [2, 3]))

    def test_json(self):
        doc = rich_edge_report(H(2, [1, 2])).to_json_dict()
        assert doc["edges"][0]["S_exact"] == 4

    @pytest.mark.parametrize("seed", range(8))
    def test_random_uniform_invariants(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 9))
        r = int(rng.integers(1, n + 1))
        import math

        m = int(rng.integers(1, min(math.comb(n, r), 10) + 1))
        h = random_uniform_hypergraph(n, r, m, rng)
        rep = rich_edge_report(h)
        assert rep.total_special >= n
        for er in rep.edges:
            assert er.s_exact >= er.s_lower
            assert len(er.cover1) <= min(r, h.m - 1)
            assert len(er.cover2) <= min(n - r, h.m - 1)
            assert er.rich == (len(er.cover2) < n - r or len(er.cover1) < r)

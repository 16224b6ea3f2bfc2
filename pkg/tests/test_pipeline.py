import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edmot.components import connected_components, top_k_components
from edmot.graph import Graph
from edmot.motif import build_motif_adjacency
from edmot.partition import Partition, PartitionerConfig, louvain
from edmot.pipeline import (PipelineError, clique_edge_set, detect_communities,
                            partition_components_to_modules, partition_hypergraph,
                            rewire_network, run_edmot)
from util import best_partition_bruteforce, communities_of, gnp

SEVEN_NODE = Graph.from_pairs(7, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
                                  (2, 3), (5, 6)])
STAR5 = Graph.from_pairs(6, [(0, i) for i in range(1, 6)])


def two_k4s():
    pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    pairs += [(u + 4, v + 4) for u, v in pairs[:6]]
    return Graph.from_pairs(8, pairs)


class TestModules:
    def test_single_triangle_component_is_one_module(self):
        g = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
        h = build_motif_adjacency(g)
        topk = top_k_components(connected_components(h), 1)
        assert partition_components_to_modules(h, topk) == [{0, 1, 2}]

    def test_two_k4_components_give_two_modules(self):
        h = build_motif_adjacency(two_k4s())
        topk = top_k_components(connected_components(h), 2)
        modules = partition_components_to_modules(h, topk)
        assert sorted(modules, key=min) == [{0, 1, 2, 3}, {4, 5, 6, 7}]

    def test_empty_topk_gives_no_modules(self):
        h = build_motif_adjacency(STAR5)
        assert partition_components_to_modules(h, []) == []

    def test_modules_disjoint_and_inside_their_component(self):
        rng = random.Random(5)
        g = gnp(30, 0.2, rng)
        h = build_motif_adjacency(g)
        cs = connected_components(h)
        topk = top_k_components(cs, 3) if cs.components else []
        modules = partition_components_to_modules(h, topk)
        seen: set[int] = set()
        for mod in modules:
            assert not (seen & mod)
            seen |= mod
            assert any(mod <= comp for comp in topk)

    def test_partitioner_failure_names_component(self):
        def broken(g, cfg):
            raise RuntimeError("boom")

        h = build_motif_adjacency(two_k4s())
        topk = top_k_components(connected_components(h), 2)
        with pytest.raises(PipelineError, match="component 0.*boom"):
            partition_components_to_modules(h, topk, broken)

    def test_partial_assignment_rejected(self):
        def partial(g, cfg):
            return Partition.from_labels([0] * (g.node_count - 1))

        h = build_motif_adjacency(two_k4s())
        topk = top_k_components(connected_components(h), 1)
        with pytest.raises(PipelineError, match="contract on component 0"):
            partition_components_to_modules(h, topk, partial)


class TestCliqueEdges:
    def test_triangle_module(self):
        assert clique_edge_set([{0, 1, 2}]) == {(0, 1), (0, 2), (1, 2)}

    def test_pair_module(self):
        assert clique_edge_set([{4, 7}]) == {(4, 7)}

    def test_binomial_count(self):
        pairs = clique_edge_set([{0, 1}, {2, 3, 4}])
        assert len(pairs) == 1 + 3
        assert pairs == {(0, 1), (2, 3), (2, 4), (3, 4)}

    def test_singleton_modules_add_nothing(self):
        assert clique_edge_set([{3}]) == set()

    def test_empty(self):
        assert clique_edge_set([]) == set()


class TestRewire:
    def test_union_with_existing_clique_is_identity(self):
        g = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
        assert rewire_network(g, {(0, 1), (0, 2), (1, 2)}) == g

    def test_path_plus_closing_edge_is_triangle(self):
        g = Graph.from_pairs(3, [(0, 1), (1, 2)])
        rewired = rewire_network(g, {(0, 2)})
        assert set(rewired.edge_pairs()) == {(0, 1), (0, 2), (1, 2)}

    def test_out_of_range_endpoint_rejected(self):
        g = Graph.from_pairs(3, [(0, 1)])
        with pytest.raises(ValueError, match="out of range"):
            rewire_network(g, {(0, 7)})

    def test_weights_reset_to_one(self):
        g = Graph(3, [(0, 1, 9.0)])
        rewired = rewire_network(g, {(1, 2)})
        assert all(w == 1.0 for _, _, w in rewired.edges())

    @settings(max_examples=60)
    @given(st.integers(0, 2**31), st.integers(3, 15))
    def test_matches_set_union_oracle(self, seed, n):
        rng = random.Random(seed)
        g = gnp(n, 0.3, rng)
        extra = {(rng.randrange(n), rng.randrange(n)) for _ in range(n)}
        extra = {(min(u, v), max(u, v)) for u, v in extra if u != v}
        rewired = rewire_network(g, extra)
        assert set(rewired.edge_pairs()) == set(g.edge_pairs()) | extra
        assert rewired.node_count == g.node_count


class TestRunPipeline:
    def test_seven_node_walkthrough(self):
        final, trace = run_edmot(SEVEN_NODE, k=1)
        assert trace.component_count == 2
        assert trace.isolated_count == 1
        assert trace.module_count == 1
        assert trace.clique_edge_count == 3
        assert trace.rewired_edge_count == SEVEN_NODE.edge_count
        assert communities_of(final) == {frozenset({0, 1, 2}), frozenset({3, 4, 5, 6})}
        # the detected split is the exhaustive modularity optimum on the
        # (here unchanged) rewired network
        _, best_labels = best_partition_bruteforce(SEVEN_NODE)
        assert communities_of(Partition(best_labels)) == communities_of(final)

    def test_triangle_free_degrades_to_plain_partitioner(self):
        cfg = PartitionerConfig(seed=3)
        final, trace = run_edmot(STAR5, k=5, cfg=cfg)
        assert trace.module_count == 0
        assert trace.clique_edge_count == 0
        assert final == louvain(STAR5, cfg)

    def test_superset_clique_and_node_preservation(self):
        for seed in range(8):
            g = gnp(24, 0.18, random.Random(seed))
            if g.edge_count == 0:
                continue
            cfg = PartitionerConfig(seed=seed)
            h = build_motif_adjacency(g)
            cs = connected_components(h)
            topk = top_k_components(cs, 2) if cs.components else []
            modules = partition_components_to_modules(h, topk, louvain, cfg)
            rewired = rewire_network(g, clique_edge_set(modules))
            assert set(g.edge_pairs()) <= set(rewired.edge_pairs())
            assert rewired.node_count == g.node_count
            for mod in modules:
                for u in sorted(mod):
                    for v in sorted(mod):
                        if u < v:
                            assert rewired.has_edge(u, v)

    def test_deterministic(self):
        g = gnp(26, 0.2, random.Random(11))
        cfg = PartitionerConfig(seed=4)
        p1, t1 = run_edmot(g, k=2, cfg=cfg)
        p2, t2 = run_edmot(g, k=2, cfg=cfg)
        assert p1 == p2
        assert t1.to_dict().keys() == t2.to_dict().keys()
        for key in ("component_count", "isolated_count", "module_count",
                    "clique_edge_count", "rewired_edge_count"):
            assert getattr(t1, key) == getattr(t2, key)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            run_edmot(Graph(0, []), 1)

    def test_stage_errors_are_tagged(self):
        def broken(g, cfg):
            raise RuntimeError("nope")

        with pytest.raises(PipelineError, match="stage 'modules'"):
            run_edmot(SEVEN_NODE, 1, partitioner=broken)

    def test_k_zero_rejected(self):
        with pytest.raises(ValueError, match="at least 1"):
            run_edmot(SEVEN_NODE, 0)
        with pytest.raises(ValueError, match="at least 1"):
            run_edmot(STAR5, 0)  # validated even when no components exist


class TestMotifBaseline:
    def test_isolated_nodes_become_singletons(self):
        part, trace = partition_hypergraph(SEVEN_NODE)
        assert trace.component_count == 2
        assert trace.isolated_count == 1
        assert {6} in part.communities()

    def test_triangle_free_graph_is_all_singletons(self):
        part, trace = partition_hypergraph(STAR5)
        assert part.community_count == STAR5.node_count
        assert trace.component_count == 0

    def test_covers_all_nodes(self):
        g = gnp(20, 0.25, random.Random(2))
        part, _ = partition_hypergraph(g)
        assert len(part) == g.node_count


class TestDispatch:
    def test_plain(self):
        part, trace, rewired = detect_communities(SEVEN_NODE, "plain")
        assert trace is None and rewired is None
        assert part == louvain(SEVEN_NODE, PartitionerConfig())

    def test_motif(self):
        part, trace, rewired = detect_communities(SEVEN_NODE, "motif")
        assert trace is not None and rewired is None

    def test_edmot_returns_rewired(self):
        part, trace, rewired = detect_communities(SEVEN_NODE, "edmot")
        assert rewired is not None
        assert rewired.node_count == SEVEN_NODE.node_count

    def test_unknown_method_rejected(self):
        with pytest.raises(ValueError, match="unknown method"):
            detect_communities(SEVEN_NODE, "best")

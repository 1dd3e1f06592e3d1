import random

import pytest
from hypothesis import given, settings, strategies as st

from coverstab.graph_core import (Graph, GraphParseError, parse_graph6,
                                  write_graph6, distance_partition,
                                  structural_profile, common_neighbors,
                                  induced_subgraph, has_twins, diameter,
                                  is_connected, is_bipartite)
from coverstab.families import complete_graph, cycle, petersen, johnson
from coverstab.aut import vertex_orbits

from oracles import ref_encode_graph6, naive_all_pairs_distances, random_graph


def k(n):
    return complete_graph(n)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return Graph(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])


class TestGraph6:
    def test_reference_records(self):
        assert write_graph6(Graph(2, [(0, 1)])) == "A_"
        assert write_graph6(Graph(2)) == "A?"
        assert write_graph6(k(3)) == "Bw"
        assert parse_graph6("A_") == Graph(2, [(0, 1)])
        assert parse_graph6("A?") == Graph(2)
        assert parse_graph6("Bw") == k(3)

    @given(graphs())
    @settings(max_examples=200, deadline=None)
    def test_round_trip(self, g):
        assert parse_graph6(write_graph6(g)) == g

    @given(graphs())
    @settings(max_examples=100, deadline=None)
    def test_agrees_with_reference_encoder(self, g):
        assert write_graph6(g) == ref_encode_graph6(g.n, g.edges())

    def test_round_trip_random_eight_vertex(self):
        rng = random.Random(2024)
        for _ in range(1000):
            g = random_graph(rng, 8)
            assert parse_graph6(write_graph6(g)) == g

    def test_parse_then_write_identity(self):
        rng = random.Random(7)
        for _ in range(200):
            line = write_graph6(random_graph(rng, rng.randrange(0, 11)))
            assert write_graph6(parse_graph6(line)) == line

    def test_extended_size_prefix(self):
        g = Graph(70, [(0, 69), (3, 50)])
        line = write_graph6(g)
        assert line.startswith("~")
        assert parse_graph6(line) == g

    def test_errors_carry_offsets(self):
        with pytest.raises(GraphParseError):
            parse_graph6("")
        with pytest.raises(GraphParseError, match="offset 0"):
            parse_graph6("\x1cw")
        with pytest.raises(GraphParseError, match="short"):
            parse_graph6("D")  # n=5 needs payload
        with pytest.raises(GraphParseError, match="trailing"):
            parse_graph6("Bw?")
        with pytest.raises(GraphParseError, match="padding"):
            # K2's payload with a stray bit in the padding area
            parse_graph6("A" + chr(0b111111 + 63))


class TestGraphType:
    def test_rejects_self_loops_and_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_equality_and_relabel(self):
        g = cycle(5)
        assert g.relabel([1, 2, 3, 4, 0]) == g
        h = g.relabel([2, 0, 3, 1, 4])
        assert h.edge_count() == 5
        assert h != Graph(5)

    def test_edges_sorted(self):
        g = Graph(4, [(2, 3), (0, 2), (0, 1)])
        assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]


class TestDistancePartition:
    def test_cycle_layers(self):
        dp = distance_partition(cycle(5), 0)
        assert [len(layer) for layer in dp.layers] == [1, 2, 2]
        assert dp.eccentricity == 2
        assert not dp.unreachable

    def test_complete_layers(self):
        dp = distance_partition(k(4), 2)
        assert [len(layer) for layer in dp.layers] == [1, 3]

    def test_disconnected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        dp = distance_partition(g, 0)
        assert dp.unreachable == frozenset({2, 3})

    def test_against_naive_all_pairs(self):
        rng = random.Random(13)
        for _ in range(60):
            n = rng.randrange(1, 11)
            g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            dist = naive_all_pairs_distances(g)
            for x in range(n):
                dp = distance_partition(g, x)
                for v in range(n):
                    if dist[x][v] == float("inf"):
                        assert v in dp.unreachable
                    else:
                        assert v in dp.layers[int(dist[x][v])]


class TestStructuralProfile:
    def test_petersen(self):
        p = structural_profile(petersen(), aut_orbits=vertex_orbits)
        assert p.connected and not p.bipartite and p.diameter == 2
        assert p.twin_free and not p.every_edge_on_triangle
        assert p.triangle_free and p.vertex_transitive

    def test_k2_and_c6(self):
        p = structural_profile(Graph(2, [(0, 1)]))
        assert p.connected and p.bipartite and p.diameter == 1
        p = structural_profile(cycle(6))
        assert p.bipartite and p.twin_free

    def test_twins_oracle(self):
        rng = random.Random(99)
        for _ in range(200):
            g = random_graph(rng, rng.randrange(1, 9))
            naive = any(g.adj[u] == g.adj[v]
                        for u in range(g.n) for v in range(u + 1, g.n))
            assert has_twins(g) == naive

    def test_every_edge_on_triangle_definition(self):
        rng = random.Random(5)
        for _ in range(200):
            g = random_graph(rng, rng.randrange(2, 9))
            naive = all(common_neighbors(g, u, v) for u, v in g.edges())
            assert structural_profile(g).every_edge_on_triangle == naive

    def test_disconnected_diameter_is_infinite(self):
        assert diameter(Graph(4, [(0, 1)])) is None
        assert structural_profile(Graph(3)).diameter is None


class TestCommonNeighbors:
    def test_complete(self):
        assert len(common_neighbors(k(4), 0, 1)) == 2

    def test_johnson_counts(self):
        g = johnson(7, 2)
        adjacent = next(iter(g.edges()))
        assert len(common_neighbors(g, *adjacent)) == 5
        far = next((u, v) for u in range(g.n) for v in range(u + 1, g.n)
                   if not g.has_edge(u, v))
        assert len(common_neighbors(g, *far)) == 4

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            common_neighbors(k(3), 1, 1)


class TestInducedSubgraph:
    def test_triangle_from_k4(self):
        sub, remap = induced_subgraph(k(4), [0, 2, 3])
        assert sub == k(3)
        assert remap == {0: 0, 2: 1, 3: 2}

    def test_path_from_cycle(self):
        sub, _ = induced_subgraph(cycle(5), [0, 1, 2])
        assert sub == Graph(3, [(0, 1), (1, 2)])

    def test_identity(self):
        g = petersen()
        sub, remap = induced_subgraph(g, range(10))
        assert sub == g and remap == {v: v for v in range(10)}

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            induced_subgraph(k(3), [])


def test_connectivity_and_bipartite_basics():
    assert is_connected(k(1)) and is_connected(cycle(4))
    assert not is_connected(Graph(2))
    assert is_bipartite(cycle(6)) and not is_bipartite(cycle(5))

import math

import networkx as nx
import pytest
from conftest import small_graphs
from hypothesis import given, settings

from copsrobbers.generators import cycle, path, petersen
from copsrobbers.graph import (
    Graph,
    GraphError,
    bfs_distances,
    build_graph,
    components,
    diameter,
    distance,
    geodesic,
    induced,
    is_connected,
    validate,
)


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def test_build_triangle():
    G = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert G.n == 3 and G.m == 3
    assert all(G.degree(v) == 2 for v in G.vertices)


def test_build_rejects_loop():
    with pytest.raises(GraphError):
        build_graph(2, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError):
        build_graph(2, [(0, 2)])


def test_build_merges_duplicates_and_ignores_order():
    G = build_graph(4, [(0, 1), (1, 0), (2, 1), (3, 2)])
    assert G == build_graph(4, [(2, 3), (0, 1), (1, 2)])
    assert G.degrees() == [1, 2, 2, 1]


def test_graph_rejects_asymmetry():
    with pytest.raises(GraphError):
        Graph(2, [{1}, set()])


def test_distances():
    assert distance(path(4), 0, 3) == 3
    two = build_graph(4, [(0, 1), (2, 3)])
    assert distance(two, 0, 3) == math.inf
    P = petersen()
    for u in range(10):
        for v in range(u + 1, 10):
            assert distance(P, u, v) == (1 if P.has_edge(u, v) else 2)


def test_distance_out_of_range():
    with pytest.raises(GraphError):
        distance(path(3), 0, 5)


def test_geodesic_tie_break():
    assert geodesic(cycle(5), 0, 2) == [0, 1, 2]
    assert geodesic(cycle(4), 0, 2) == [0, 1, 2]
    assert geodesic(cycle(4), 3, 3) == [3]


def test_geodesic_disconnected():
    with pytest.raises(GraphError):
        geodesic(build_graph(3, [(0, 1)]), 0, 2)


def test_induced_and_diameter():
    H, mapping = induced(cycle(5), {0, 1, 2})
    assert H == path(3) and mapping == {0: 0, 1: 1, 2: 2}
    assert diameter(petersen()) == 2
    assert diameter(build_graph(3, [(0, 1)])) == math.inf


def test_induced_reindexes():
    H, mapping = induced(cycle(6), [5, 0, 3])
    assert mapping == {0: 0, 3: 1, 5: 2}
    assert H.edges() == [(0, 2)]


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=8))
def test_bfs_matches_networkx(G):
    validate(G)
    ref = to_nx(G)
    for s in G.vertices:
        assert bfs_distances(G, s) == nx.single_source_shortest_path_length(ref, s)
    assert is_connected(G) == nx.is_connected(ref)
    assert sorted(map(sorted, components(G))) == sorted(map(sorted, nx.connected_components(ref)))


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=7, connected=True))
def test_metric_properties(G):
    for u in G.vertices:
        assert distance(G, u, u) == 0
        for v in G.vertices:
            p = geodesic(G, u, v)
            assert len(p) - 1 == distance(G, u, v)
            assert all(G.has_edge(a, b) for a, b in zip(p, p[1:]))
            for w in G.vertices:
                assert distance(G, u, w) <= distance(G, u, v) + distance(G, v, w)

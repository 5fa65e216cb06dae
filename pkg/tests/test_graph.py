import networkx as nx
import pytest
from hypothesis import given, settings

from graphlets.graph import (
    Graph,
    GraphError,
    articulation_points,
    complete_graph,
    cycle_graph,
    eccentricity,
    minimum_vertex_cuts,
    path_graph,
    petersen_graph,
    star_graph,
    vertex_connectivity,
)

from .strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_rejects_loops_and_asymmetry():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_basic_queries():
    g = star_graph(4)
    assert g.m == 3 and g.degree(0) == 3 and g.degrees() == [3, 1, 1, 1]
    assert g.neighbors(0) == [1, 2, 3]
    assert not g.delete_vertex(0).is_connected()
    assert g.induced([0, 2]).edges() == [(0, 1)]


@pytest.mark.parametrize("g, expected", [
    (cycle_graph(4), 2),
    (path_graph(3), 1),
    (complete_graph(5), 4),
    (Graph.from_edges(4, [(0, 1), (2, 3)]), 0),
    (petersen_graph(), 3),
])
def test_vertex_connectivity_examples(g, expected):
    assert vertex_connectivity(g) == expected


def test_eccentricity_examples():
    p5 = path_graph(5)
    assert eccentricity(p5, 0) == 4
    assert eccentricity(p5, 2) == 2
    pet = petersen_graph()
    assert all(eccentricity(pet, v) == 2 for v in range(10))
    with pytest.raises(GraphError):
        eccentricity(Graph.empty(2), 0)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    assert vertex_connectivity(g) == nx.node_connectivity(h)
    if g.is_connected():
        assert sorted(articulation_points(g)) == sorted(nx.articulation_points(h))
        assert all(eccentricity(g, v) == nx.eccentricity(h, v) for v in range(g.n))


def test_minimum_cuts_of_c5():
    c5 = cycle_graph(5)
    cuts = minimum_vertex_cuts(c5, 2)
    assert len(cuts) == 5  # the non-adjacent pairs
    assert not any(c5.has_edge(*sorted(c)) for c in cuts)

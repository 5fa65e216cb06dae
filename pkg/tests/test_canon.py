from itertools import permutations

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from graphlets.canon import (
    CanonicalCode,
    adjacency_code,
    automorphism_orbits,
    canonical_code,
    canonical_form,
    is_rigid,
    isomorphic,
)
from graphlets.generate import all_graphs
from graphlets.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph

from .strategies import graphs
from .test_graph import to_nx


def brute_orbits(g):
    """Orbit partition from every automorphism (permutation scan)."""
    autos = [p for p in permutations(range(g.n)) if all(g.has_edge(p[u], p[v]) for u, v in g.edges())]
    return sorted({tuple(sorted({p[v] for p in autos})) for v in range(g.n)})


def partition(orbit_id):
    groups = {}
    for v, o in enumerate(orbit_id):
        groups.setdefault(o, []).append(v)
    return sorted(tuple(vs) for vs in groups.values())


def test_relabelled_p3_same_code():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(1, 0), (0, 2)])
    assert canonical_code(a) == canonical_code(b)
    assert canonical_code(complete_graph(3)) != canonical_code(a)


def test_four_vertex_graphs_have_eleven_codes():
    codes = {canonical_code(g) for g in all_graphs(4)}
    assert len(codes) == 11
    # independent dedupe of all 64 labelled graphs
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    labelled = [nx.Graph([p for i, p in enumerate(pairs) if mask >> i & 1]) for mask in range(64)]
    for h in labelled:
        h.add_nodes_from(range(4))
    reps = []
    for h in labelled:
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    assert len(reps) == 11


def test_orbit_examples():
    assert partition(automorphism_orbits(cycle_graph(5))) == [(0, 1, 2, 3, 4)]
    assert partition(automorphism_orbits(star_graph(4))) == [(0,), (1, 2, 3)]
    assert partition(automorphism_orbits(path_graph(4))) == [(0, 3), (1, 2)]


def test_smallest_rigid_graph_has_six_vertices():
    for n in range(2, 6):
        assert not any(is_rigid(g) for g in all_graphs(n))
    assert any(is_rigid(g) for g in all_graphs(6))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_orbits_match_permutation_scan(g):
    assert partition(canonical_form(g).orbit_id) == brute_orbits(g)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=0, max_n=12), st.data())
def test_code_is_relabel_invariant(g, data):
    order = data.draw(st.permutations(range(g.n)))
    h = g.relabel(order)
    fg, fh = canonical_form(g), canonical_form(h)
    assert fg.code == fh.code
    # the labeling realizes the code and generators are automorphisms
    assert adjacency_code(g.adj, fg.labeling) == fg.code.bits
    for gen in fg.generators:
        assert all(g.has_edge(gen[u], gen[v]) for u, v in g.edges())
    assert fg.code.graph() == g.relabel(fg.labeling)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=4, max_n=7), graphs(min_n=4, max_n=7))
def test_isomorphic_agrees_with_networkx(g, h):
    assert isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_hex_round_trip():
    code = canonical_code(cycle_graph(6))
    assert CanonicalCode.from_hex(code.hex()) == code

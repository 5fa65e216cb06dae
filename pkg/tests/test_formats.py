import networkx as nx
import pytest
from hypothesis import given, settings

from graphlets.formats import (
    FormatError,
    parse_edge_list,
    parse_graph6,
    read_graph,
    read_graph6_lines,
    write_edge_list,
    write_graph6,
)
from graphlets.graph import Graph

from .strategies import graphs


def test_tiny_codes():
    assert parse_graph6("A_") == Graph.from_edges(2, [(0, 1)])
    assert parse_graph6("A?") == Graph.empty(2)
    assert parse_graph6(">>graph6<<A_") == Graph.from_edges(2, [(0, 1)])


def test_d_question_brace_against_networkx():
    g = parse_graph6("D?{")
    h = nx.from_graph6_bytes(b"D?{")
    assert g.n == 5
    assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in h.edges())


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=0, max_n=12))
def test_graph6_round_trip_and_networkx_agreement(g):
    code = write_graph6(g)
    assert parse_graph6(code) == g
    h = nx.from_graph6_bytes(code.encode())
    assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in h.edges())


def test_large_header():
    g = Graph.from_edges(70, [(0, 69), (3, 4)])
    code = write_graph6(g)
    assert code.startswith("~")
    assert parse_graph6(code) == g


@pytest.mark.parametrize("bad, offset", [
    ("A", 1),        # missing body
    ("A_?", 2),      # trailing byte
    ("A\x01", 1),    # byte below 63
    ("B`", 1),       # padding bits set (n=3 needs 3 bits of 6)
])
def test_errors_name_offset(bad, offset):
    with pytest.raises(FormatError) as info:
        parse_graph6(bad)
    assert info.value.offset == offset


def test_edge_list_round_trip_and_detection():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    text = write_edge_list(g)
    assert parse_edge_list(text) == g
    assert read_graph(text) == g
    assert read_graph(write_graph6(g) + "\n") == g
    with pytest.raises(FormatError):
        parse_edge_list("3 2\n0 1\n")


def test_multi_line_reader_skips_blanks():
    assert len(list(read_graph6_lines(["A_", "", "A?\n"]))) == 2

from hypothesis import strategies as st

from graphlets.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, k in zip(pairs, keep) if k]
    if connected:
        # a random spanning tree keeps every draw connected
        for v in range(1, n):
            edges.append((draw(st.integers(0, v - 1)), v))
    return Graph.from_edges(n, set(edges))


@st.composite
def relabelled(draw, g):
    order = draw(st.permutations(range(g.n)))
    return g.relabel(order)

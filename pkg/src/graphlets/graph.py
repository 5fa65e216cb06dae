"""Labeled simple undirected graphs stored as per-vertex bitmasks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ENUM_N = 32


class GraphError(ValueError):
    """Raised for invalid graph construction or an unmet graph precondition."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an int bitmask of the neighbours of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                rest ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.adj[u] >> v & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex ``vertices[i]`` becomes vertex ``i``."""
        rows = []
        for u in vertices:
            row = 0
            au = self.adj[u]
            for j, w in enumerate(vertices):
                if au >> w & 1:
                    row |= 1 << j
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def delete_vertex(self, x: int) -> "Graph":
        return self.induced([v for v in range(self.n) if v != x])

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is old vertex ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return self.induced(order)

    def add_vertex(self, neighbours: Iterable[int]) -> "Graph":
        mask = 0
        for u in neighbours:
            mask |= 1 << u
        rows = [row | ((mask >> v & 1) << self.n) for v, row in enumerate(self.adj)]
        rows.append(mask)
        return Graph(self.n + 1, tuple(rows))

    def is_connected(self) -> bool:
        return self.n > 0 and component_mask(self.adj, 0, (1 << self.n) - 1) == (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def component_mask(adj: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` using only vertices in ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    if not mask:
        return False
    start = (mask & -mask).bit_length() - 1
    return component_mask(adj, start, mask) == mask


# --- standard families ------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# --- distances and connectivity oracles -------------------------------------


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in iter_bits(g.adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def eccentricity(g: Graph, v: int) -> int:
    dist = bfs_distances(g, v)
    if min(dist) < 0:
        raise GraphError("eccentricity is undefined on a disconnected graph")
    return max(dist)


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices of a connected graph, by direct deletion."""
    full = (1 << g.n) - 1
    out = []
    for x in range(g.n):
        rest = full & ~(1 << x)
        if rest and not is_connected_mask(g.adj, rest):
            out.append(x)
    return out


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Max number of internally vertex-disjoint s-t paths (s, t non-adjacent).

    Unit-capacity max flow on the split graph: vertex v becomes v_in=2v,
    v_out=2v+1 joined by a capacity-1 arc.
    """
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * g.n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = g.n
    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Largest k such that ``g`` is k-vertex-connected; K_n gives n-1."""
    if g.n < 2:
        raise GraphError("vertex connectivity needs n >= 2")
    if not g.is_connected():
        return 0
    best = g.n - 1
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, _local_connectivity(g, s, t))
    return best


def minimum_vertex_cuts(g: Graph, size: int) -> list[frozenset[int]]:
    """All vertex subsets of the given size whose removal disconnects ``g``."""
    full = (1 << g.n) - 1
    cuts = []
    for cut in combinations(range(g.n), size):
        rest = full
        for v in cut:
            rest &= ~(1 << v)
        if rest and not is_connected_mask(g.adj, rest):
            cuts.append(frozenset(cut))
    return cuts

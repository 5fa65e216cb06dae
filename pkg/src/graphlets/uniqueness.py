"""Vertices (and whole graphs) sharing graphlet counts across non-isomorphic graphs."""

from __future__ import annotations

import hashlib
import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .canon import canonical_form
from .catalog import load_catalog
from .engine import rooted_census, subset_counts
from .formats import write_graph6
from .generate import all_graphs, connected_graphs
from .graph import Graph, GraphError

MAX_SEARCH_N = 7
CONNECTED_CLASS_COUNTS = {8: 11117, 9: 261080, 10: 11716571}


@dataclass
class SameGdsPair:
    g1: Graph  # path ending in a triangle
    g2: Graph  # path ending in a fork
    v1: int
    v2: int


def triangle_fork_graphs(n: int) -> tuple[Graph, Graph]:
    if n < 4:
        raise GraphError("the triangle/fork construction needs n >= 4")
    path = [(i, i + 1) for i in range(n - 3)]
    end, t1, t2 = n - 3, n - 2, n - 1
    fork = path + [(end, t1), (end, t2)]
    return Graph.from_edges(n, fork + [(t1, t2)]), Graph.from_edges(n, fork)


def same_gds_pair(n: int) -> SameGdsPair:
    """Path on n-2 vertices closed by a triangle, resp. a fork; the far path
    endpoint (vertex 0) has the same (<= n-1)-gds in both graphs."""
    g1, g2 = triangle_fork_graphs(n)
    if rooted_census(g1, 0, n - 1) != rooted_census(g2, 0, n - 1):
        raise AssertionError(f"triangle/fork endpoints differ at n={n}")
    return SameGdsPair(g1, g2, 0, 0)


@dataclass
class CollisionRecord:
    code_a: str
    code_b: str
    graph6_a: str
    graph6_b: str
    vertex_a: int | None  # None for whole-gdd collisions
    vertex_b: int | None
    shared: list
    is_triangle_fork_instance: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def _digest(obj) -> bytes:
    return hashlib.blake2b(repr(obj).encode(), digest_size=16).digest()


def _template(n: int):
    if n < 4:
        return None
    g1, g2 = triangle_fork_graphs(n)
    f1, f2 = canonical_form(g1), canonical_form(g2)
    return {(f1.code, f1.orbit_id[0]), (f2.code, f2.orbit_id[0])}, {f1.code, f2.code}


def _graph_items(task):
    g, k, mode = task
    form = canonical_form(g)
    D = subset_counts(g, k, load_catalog(k))
    if mode == "whole_gdd":
        return [(form, g, None, D.row_multiset())]
    items, seen = [], set()
    for v in range(g.n):
        if form.orbit_id[v] not in seen:
            seen.add(form.orbit_id[v])
            items.append((form, g, v, tuple(int(x) for x in D.row(v))))
    return items


def collision_search(n: int, mode: str = "vertex_gds", k: int | None = None,
                     connected_only: bool = True, jobs: int = 1) -> list[CollisionRecord]:
    """Exhaustive search over graphs on ``n`` vertices.

    ``vertex_gds``: pairs (G, v), (G', v') with G, G' non-isomorphic and equal
    (<= k)-gds rows, one vertex per automorphism orbit. ``whole_gdd``: pairs of
    non-isomorphic graphs with equal row multisets.
    """
    if mode not in ("vertex_gds", "whole_gdd"):
        raise ValueError(f"unknown mode {mode!r}")
    if n > MAX_SEARCH_N:
        est = CONNECTED_CLASS_COUNTS.get(n, "more than 10^7")
        raise ValueError(f"n={n} exceeds exhaustive range {MAX_SEARCH_N} ({est} connected classes)")
    if n < 3:
        return []
    k = n - 1 if k is None else k
    if not 2 <= k <= n - 1:
        raise ValueError(f"k must be in 2..{n - 1}")
    graphs = connected_graphs(n) if connected_only else all_graphs(n)
    template = _template(n)
    tasks = [(g, k, mode) for g in graphs]
    if jobs > 1:
        load_catalog(k)  # forked workers inherit the memo
        with ProcessPoolExecutor(jobs) as pool:
            chunks = list(pool.map(_graph_items, tasks, chunksize=16))
    else:
        chunks = [_graph_items(t) for t in tasks]
    items = [item for chunk in chunks for item in chunk]

    buckets: dict[bytes, list] = defaultdict(list)
    for item in items:
        buckets[_digest(item[3])].append(item)

    records = []
    for members in buckets.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                fa, ga, va, ka = members[a]
                fb, gb, vb, kb = members[b]
                if ka != kb or fa.code == fb.code:
                    continue
                if (fa.code.size, fa.code.bits) > (fb.code.size, fb.code.bits):
                    fa, ga, va, fb, gb, vb = fb, gb, vb, fa, ga, va
                flag = False
                if template is not None:
                    if mode == "vertex_gds":
                        flag = {(fa.code, fa.orbit_id[va]), (fb.code, fb.orbit_id[vb])} == template[0]
                    else:
                        flag = {fa.code, fb.code} == template[1]
                shared = [list(r) for r in ka] if mode == "whole_gdd" else list(ka)
                records.append(CollisionRecord(fa.code.hex(), fb.code.hex(), write_graph6(ga),
                                               write_graph6(gb), va, vb, shared, flag))
    records.sort(key=lambda r: (r.code_a, r.code_b, r.vertex_a or 0, r.vertex_b or 0))
    return records

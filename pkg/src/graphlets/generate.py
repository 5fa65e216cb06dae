"""Isomorph-free generation of small graphs.

Connected graphs on ``n`` vertices are grown from connected graphs on
``n - 1`` vertices by adding one vertex joined to a nonempty subset; every
connected graph arises this way because it has a non-cut vertex. Children
are deduplicated by canonical code, and each class is stored as its
canonically relabeled representative.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .canon import CanonicalCode, canonical_form
from .graph import Graph, GraphError


def _canonical_graph(g: Graph) -> tuple[CanonicalCode, Graph]:
    form = canonical_form(g)
    return form.code, g.relabel(form.labeling)


def _sort_key(item: tuple[CanonicalCode, Graph]) -> tuple[int, int]:
    code, g = item
    return g.m, code.bits


def _subset_orbit_reps(parent: Graph) -> list[int]:
    """Nonempty neighbour masks for the new vertex, one per Aut(parent)-orbit."""
    gens = canonical_form(parent).generators
    n = parent.n
    keep = []
    for mask in range(1, 1 << n):
        smallest = True
        for gen in gens:
            img = 0
            for v in range(n):
                if mask >> v & 1:
                    img |= 1 << gen[v]
            if img < mask:
                smallest = False
                break
        if smallest:
            keep.append(mask)
    return keep


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all connected graphs on ``n`` vertices.

    Sorted by (edge count, canonical code).
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[CanonicalCode, Graph] = {}
    for parent in connected_graphs(n - 1):
        for mask in _subset_orbit_reps(parent):
            child = parent.add_vertex(v for v in range(parent.n) if mask >> v & 1)
            code, canon = _canonical_graph(child)
            if code not in found:
                found[code] = canon
    return tuple(g for _, g in sorted(found.items(), key=_sort_key))


def disjoint_union(parts: list[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for part in parts:
        rows.extend(row << offset for row in part.adj)
        offset += part.n
    return Graph(offset, tuple(rows))


def _partitions(n: int, largest: int):
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Built as multisets of connected components, so no deduplication is
    needed. Sorted by (edge count, canonical code).
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    out = []
    for sizes in _partitions(n, n):
        groups: dict[int, int] = {}
        for s in sizes:
            groups[s] = groups.get(s, 0) + 1
        choices = [
            list(combinations_with_replacement(range(len(connected_graphs(s))), count))
            for s, count in groups.items()
        ]

        def expand(i: int, acc: list[Graph]):
            if i == len(choices):
                yield list(acc)
                return
            s = list(groups)[i]
            pool = connected_graphs(s)
            for combo in choices[i]:
                yield from expand(i + 1, acc + [pool[j] for j in combo])

        for parts in expand(0, []):
            out.append(_canonical_graph(disjoint_union(parts)))
    out.sort(key=_sort_key)
    return tuple(g for _, g in out)


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all trees on ``n`` vertices."""
    if n < 1:
        raise GraphError("n must be >= 1")
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[CanonicalCode, Graph] = {}
    for parent in trees(n - 1):
        for v in range(parent.n):
            code, canon = _canonical_graph(parent.add_vertex([v]))
            found.setdefault(code, canon)
    return tuple(g for _, g in sorted(found.items(), key=_sort_key))

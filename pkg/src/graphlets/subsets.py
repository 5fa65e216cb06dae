"""Connected induced vertex-subset enumeration (ESU expansion on bitmasks)."""

from __future__ import annotations

from typing import Sequence


def rooted_connected_sets(adj: Sequence[int], root: int, max_size: int, allowed: int | None = None) -> list[int]:
    """Every connected vertex set containing ``root`` of size <= ``max_size``.

    Only vertices in ``allowed`` (default: all) may join. Each set is produced
    exactly once: a vertex enters the extension set only through the first
    set member it is adjacent to.
    """
    if allowed is None:
        allowed = (1 << len(adj)) - 1
    allowed &= ~(1 << root)
    start = 1 << root
    out = [start]
    if max_size <= 1:
        return out
    stack = [(start, adj[root] & allowed, adj[root] | start, 1)]
    while stack:
        sub, ext, closed, size = stack.pop()
        while ext:
            low = ext & -ext
            ext ^= low
            child = sub | low
            out.append(child)
            if size + 1 < max_size:
                w = low.bit_length() - 1
                stack.append((child, ext | (adj[w] & allowed & ~closed), closed | adj[w], size + 1))
    return out


def connected_sets(adj: Sequence[int], max_size: int, min_size: int = 1) -> list[int]:
    """Every connected vertex set of the graph with size in [min_size, max_size]."""
    n = len(adj)
    full = (1 << n) - 1
    out = []
    for v in range(n):
        above = full & ~((1 << (v + 1)) - 1)
        for mask in rooted_connected_sets(adj, v, max_size, above):
            if mask.bit_count() >= min_size:
                out.append(mask)
    return out

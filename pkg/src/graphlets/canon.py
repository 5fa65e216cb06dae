"""Canonical labeling and automorphism orbits.

Individualization-refinement search: colour refinement to an equitable
ordered partition, branching on the first non-singleton cell, and the
canonical labeling is the leaf with the smallest adjacency code. Automorphisms
found at equivalent leaves prune sibling branches lying in one orbit of the
pointwise stabilizer of the current prefix. The automorphisms collected this
way generate the full group, which gives exact vertex orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .graph import Graph


class CanonicalCode(NamedTuple):
    """Upper triangle of the canonically relabeled adjacency, row-major, first bit most significant."""

    size: int
    bits: int

    def hex(self) -> str:
        return f"{self.size}:{self.bits:x}"

    @classmethod
    def from_hex(cls, text: str) -> "CanonicalCode":
        size, bits = text.split(":")
        return cls(int(size), int(bits, 16))

    def graph(self) -> Graph:
        return graph_from_code(self.size, self.bits)


@dataclass(frozen=True)
class CanonicalForm:
    code: CanonicalCode
    labeling: tuple[int, ...]  # canonical position -> original vertex
    orbit_id: tuple[int, ...]  # original vertex -> orbit index
    generators: tuple[tuple[int, ...], ...]

    @property
    def position(self) -> tuple[int, ...]:
        inv = [0] * len(self.labeling)
        for pos, v in enumerate(self.labeling):
            inv[v] = pos
        return tuple(inv)

    @property
    def n_orbits(self) -> int:
        return max(self.orbit_id, default=-1) + 1


def adjacency_code(adj: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (row >> order[j] & 1)
    return code


def graph_from_code(size: int, bits: int) -> Graph:
    rows = [0] * size
    idx = size * (size - 1) // 2 - 1
    for i in range(size):
        for j in range(i + 1, size):
            if bits >> idx & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx -= 1
    return Graph(size, tuple(rows))


def _refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    n = len(colors)
    ncells = max(colors) + 1
    while True:
        cells = [0] * ncells
        for v, c in enumerate(colors):
            cells[c] |= 1 << v
        sigs = [(colors[v], tuple((adj[v] & cm).bit_count() for cm in cells)) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(ranks) == ncells:
            return colors
        colors = [ranks[s] for s in sigs]
        ncells = len(ranks)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _orbits(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    parent = list(range(n))
    for gen in gens:
        for v in range(n):
            a, b = _find(parent, v), _find(parent, gen[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [_find(parent, v) for v in range(n)]


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.first: tuple[int, list[int]] | None = None
        self.best: tuple[int, list[int]] | None = None
        self.gens: list[tuple[int, ...]] = []

    def _automorphism(self, a: list[int], b: list[int]) -> None:
        perm = [0] * self.n
        for x, y in zip(a, b):
            perm[x] = y
        if any(perm[v] != v for v in range(self.n)):
            self.gens.append(tuple(perm))

    def leaf(self, colors: list[int]) -> None:
        perm = [0] * self.n
        for v, c in enumerate(colors):
            perm[c] = v
        code = adjacency_code(self.adj, perm)
        if self.first is None:
            self.first = self.best = (code, perm)
            return
        if code == self.first[0]:
            self._automorphism(self.first[1], perm)
        elif code == self.best[0]:
            self._automorphism(self.best[1], perm)
        elif code < self.best[0]:
            self.best = (code, perm)

    def run(self, colors: list[int], prefix: tuple[int, ...]) -> None:
        colors = _refine(self.adj, colors)
        ncells = max(colors) + 1
        if ncells == self.n:
            self.leaf(colors)
            return
        counts = [0] * ncells
        for c in colors:
            counts[c] += 1
        target = next(c for c in range(ncells) if counts[c] > 1)
        cell = [v for v in range(self.n) if colors[v] == target]
        tried: list[int] = []
        seen_gens = -1
        orbit = None
        for u in cell:
            if tried:
                if len(self.gens) != seen_gens:
                    seen_gens = len(self.gens)
                    stab = [g for g in self.gens if all(g[p] == p for p in prefix)]
                    orbit = _orbits(self.n, stab)
                if any(orbit[u] == orbit[t] for t in tried):
                    continue
            child = [
                c + 1 if c > target or (c == target and v != u) else c
                for v, c in enumerate(colors)
            ]
            self.run(child, prefix + (u,))
            tried.append(u)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical labeling, canonical code and automorphism orbits of ``g``."""
    n = g.n
    if n == 0:
        return CanonicalForm(CanonicalCode(0, 0), (), (), ())
    search = _Search(g.adj)
    search.run([0] * n, ())
    code, perm = search.best
    reps = _orbits(n, search.gens)
    pos = [0] * n
    for p, v in enumerate(perm):
        pos[v] = p
    # orbit index order: smallest canonical position within the orbit
    first_pos: dict[int, int] = {}
    for v in range(n):
        r = reps[v]
        first_pos[r] = min(first_pos.get(r, n), pos[v])
    rank = {r: i for i, r in enumerate(sorted(first_pos, key=first_pos.__getitem__))}
    orbit_id = tuple(rank[reps[v]] for v in range(n))
    return CanonicalForm(CanonicalCode(n, code), tuple(perm), orbit_id, tuple(search.gens))


def canonical_code(g: Graph) -> CanonicalCode:
    return canonical_form(g).code


def automorphism_orbits(g: Graph) -> tuple[int, ...]:
    """Orbit index per vertex; indices are ordered by smallest canonical label."""
    return canonical_form(g).orbit_id


def is_rigid(g: Graph) -> bool:
    return canonical_form(g).n_orbits == g.n


@lru_cache(maxsize=1 << 20)
def classify_pattern(size: int, bits: int) -> tuple[CanonicalCode, tuple[int, ...]]:
    """Canonical code and per-position orbit index of a labeled pattern.

    ``bits`` uses the same packing as :class:`CanonicalCode`, but in the
    pattern's own vertex order.
    """
    form = canonical_form(graph_from_code(size, bits))
    return form.code, form.orbit_id


def pattern_bits(adj: Sequence[int], vertices: Sequence[int]) -> int:
    return adjacency_code(adj, vertices)


def isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_code(g) == canonical_code(h)

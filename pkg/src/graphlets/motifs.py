"""Motif vectors (whole-graph induced counts) and gdd-versus-motif separation."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .catalog import MIN_SIZE, Catalog
from .engine import GddMatrix, subset_counts
from .generate import connected_graphs
from .graph import Graph
from .connectivity import IntegrityError


@dataclass(frozen=True)
class MotifVector:
    """Induced occurrence count per graph class, indexed by gamma."""

    counts: tuple[int, ...]

    def __getitem__(self, gamma: int) -> int:
        return self.counts[gamma]

    def __len__(self) -> int:
        return len(self.counts)

    def przulj_order(self, catalog: Catalog) -> tuple[int, ...]:
        """The same counts listed in Przulj graph order (G0, G1, ...)."""
        out = [0] * len(self.counts)
        for gamma, c in enumerate(self.counts):
            out[catalog.przulj_graph_of(gamma)] = c
        return tuple(out)

    def to_csv(self) -> str:
        return "gamma,count\n" + "".join(f"{g},{c}\n" for g, c in enumerate(self.counts))


def motifs_from_gdd(D: GddMatrix) -> MotifVector:
    """Sum the rows, merge rootings of the same underlying graph, divide by its size."""
    cat = D.catalog
    top = max(D.sizes, default=0)
    ngamma = cat.gamma_end(top)
    totals = [0] * ngamma
    col_sums = D.counts.sum(axis=0)
    for t, s in zip(D.columns, col_sums):
        totals[cat.underlying(t)] += int(s)
    out = []
    for gamma, total in enumerate(totals):
        size = cat.graph_classes[gamma].size
        q, r = divmod(total, size)
        if r:
            raise IntegrityError(f"class {gamma}: total {total} not divisible by size {size}")
        out.append(q)
    return MotifVector(tuple(out))


def motif_vector(g: Graph, max_size: int, catalog: Catalog) -> MotifVector:
    """Direct whole-graph induced count over all vertex subsets (no gdd involved)."""
    totals = [0] * catalog.gamma_end(max_size)
    for size in range(MIN_SIZE, min(max_size, g.n) + 1):
        for verts in combinations(range(g.n), size):
            sub = g.induced(verts)
            if sub.is_connected():
                totals[catalog.classify_graph(sub)] += 1
    return MotifVector(tuple(totals))


def distinguishing_pairs(n: int, max_size: int, catalog: Catalog) -> Iterator[tuple[Graph, Graph, MotifVector]]:
    """Non-isomorphic connected pairs on ``n`` vertices with equal motif vectors
    but different gdd row multisets, in deterministic order."""
    buckets: dict[MotifVector, list[tuple[Graph, tuple]]] = defaultdict(list)
    for g in connected_graphs(n):
        D = subset_counts(g, max_size, catalog)
        buckets[motifs_from_gdd(D)].append((g, D.row_multiset()))
    for vec, members in buckets.items():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if members[a][1] != members[b][1]:
                    yield members[a][0], members[b][0], vec


def find_distinguishing_pair(n: int, max_size: int, catalog: Catalog) -> tuple[Graph, Graph] | None:
    if n > 8:
        raise ValueError("exhaustive pair search supports n <= 8")
    for g1, g2, _ in distinguishing_pairs(n, max_size, catalog):
        return g1, g2
    return None

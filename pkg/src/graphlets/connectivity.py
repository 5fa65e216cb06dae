"""Vertex connectivity, articulations and cut-core vertices read from a gdd block.

Nothing here looks at the graph itself. For a vertex ``v`` the sum of its
size-(n-k+1) counts equals C(n-1, k-1) exactly when deleting any k-1 other
vertices leaves a connected graph, i.e. when ``v`` lies in every vertex cut
of size k-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .engine import GddMatrix


class IntegrityError(ValueError):
    """The matrix cannot be the gdd of any connected graph."""


def _block_sums(block: GddMatrix, n: int, size: int) -> list[int]:
    if block.n != n:
        raise ValueError(f"matrix has {block.n} rows, expected n={n}")
    bad = [t for t in block.columns if block.catalog.size_of(t) != size]
    if bad:
        raise ValueError(f"expected only size-{size} columns, got graphlet {bad[0]} "
                         f"of size {block.catalog.size_of(bad[0])}")
    return [int(s) for s in block.counts.sum(axis=1)]


def k_connectivity_from_gdd(block: GddMatrix, n: int, k: int) -> bool:
    """True iff the source graph is k-vertex-connected."""
    if not 2 <= k <= n - 1:
        raise ValueError(f"k must be in 2..n-1, got {k}")
    target = comb(n - 1, k - 1)
    return all(s == target for s in _block_sums(block, n, n - k + 1))


@dataclass
class ConnectivityReport:
    n: int
    k_tested: int
    verdict: str  # "k_connected" | "articulation" | "multiple_articulations" | "cut_core"
    per_vertex_sums: list[int]
    vertices: list[int] = field(default_factory=list)

    @property
    def articulation(self) -> int | None:
        return self.vertices[0] if self.verdict == "articulation" else None

    def describe(self) -> str:
        if self.verdict == "k_connected":
            return f"{self.k_tested}-connected"
        if self.verdict == "articulation":
            return f"unique articulation: vertex {self.vertices[0]}"
        if self.verdict == "multiple_articulations":
            return "multiple articulations"
        return f"not {self.k_tested}-connected; cut core: " + (",".join(map(str, self.vertices)) or "none")

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "description": self.describe(),
            "k": self.k_tested,
            "n": self.n,
            "vertices": self.vertices,
            "per_vertex_sums": self.per_vertex_sums,
        }


def articulation_analysis(block: GddMatrix, n: int) -> ConnectivityReport:
    """Classify a connected graph from its size-(n-1) block.

    The row-sum property ``sum = n - 1`` holds for no vertex (two or more
    articulations), exactly the articulation (one articulation) or every
    vertex (2-connected).
    """
    sums = _block_sums(block, n, n - 1)
    hits = [v for v, s in enumerate(sums) if s == n - 1]
    if len(hits) == n:
        return ConnectivityReport(n, 2, "k_connected", sums, hits)
    if len(hits) == 1:
        return ConnectivityReport(n, 2, "articulation", sums, hits)
    if not hits:
        return ConnectivityReport(n, 2, "multiple_articulations", sums, [])
    raise IntegrityError(f"{len(hits)} of {n} vertices have sum n-1; only 0, 1 or n are possible")


def cut_core_vertices(block: GddMatrix, n: int, k: int) -> set[int]:
    """Vertices lying in every vertex cut of size k-1, from the size-(n-k+1) block.

    The source graph must be (k-1)-connected. The result has n members when
    the graph is k-connected and at most k-1 otherwise.
    """
    if not 2 <= k <= n - 1:
        raise ValueError(f"k must be in 2..n-1, got {k}")
    target = comb(n - 1, k - 1)
    sums = _block_sums(block, n, n - k + 1)
    core = {v for v, s in enumerate(sums) if s == target}
    if k - 1 < len(core) < n:
        raise IntegrityError(f"{len(core)} vertices satisfy the row-sum property; allowed 0..{k - 1} or {n}")
    return core


def cut_core_report(block: GddMatrix, n: int, k: int) -> ConnectivityReport:
    core = cut_core_vertices(block, n, k)
    sums = _block_sums(block, n, n - k + 1)
    verdict = "k_connected" if len(core) == n else "cut_core"
    return ConnectivityReport(n, k, verdict, sums, sorted(core))

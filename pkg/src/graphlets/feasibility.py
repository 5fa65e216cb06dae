"""Size-2/3 graphlet counts: local identities, necessary conditions, and an
exhaustive decision procedure for realizability of an n x 3 count matrix.

Columns of a ``Gds3Matrix`` are (edge, P3-end, triangle) per vertex; an
optional fourth column carries P3-middle, which is determined by the others
through ``mid = C(deg, 2) - triangles``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from .catalog import Catalog, load_catalog
from .engine import subset_counts
from .generate import all_graphs
from .graph import Graph, iter_bits

EDGE, P3_END, P3_MID, TRIANGLE = 0, 1, 2, 3
MAX_EXHAUSTIVE_N = 8


@dataclass(frozen=True)
class Gds3Matrix:
    rows: tuple[tuple[int, ...], ...]  # (edge, p3_end, triangle[, p3_mid])

    def __post_init__(self) -> None:
        widths = {len(r) for r in self.rows}
        if widths - {3, 4} or len(widths) > 1:
            raise ValueError("rows must all have 3 or 4 entries")

    @classmethod
    def from_array(cls, data) -> "Gds3Matrix":
        return cls(tuple(tuple(int(x) for x in r) for r in np.asarray(data).reshape(len(data), -1)))

    @classmethod
    def from_csv(cls, text: str) -> "Gds3Matrix":
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(",")]
            if not parts[0].lstrip("-").isdigit():
                continue  # header
            rows.append(tuple(int(p) for p in parts))
        return cls(tuple(rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def has_mid(self) -> bool:
        return bool(self.rows) and len(self.rows[0]) == 4

    def core(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(r[:3] for r in self.rows)

    def multiset(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(sorted(self.core()))

    def to_csv(self) -> str:
        head = "edge,p3_end,triangle" + (",p3_mid" if self.has_mid else "")
        return head + "\n" + "".join(",".join(map(str, r)) + "\n" for r in self.rows)


def _small_catalog() -> Catalog:
    return load_catalog(3)


def gds3(g: Graph, with_mid: bool = False) -> Gds3Matrix:
    """The {2,3}-gdd of any graph (connected or not, any n)."""
    D = subset_counts(g, 3, _small_catalog()).counts
    cols = [EDGE, P3_END, TRIANGLE] + ([P3_MID] if with_mid else [])
    return Gds3Matrix.from_array(D[:, cols]) if g.n else Gds3Matrix(())


@dataclass
class IdentityReport:
    ok: bool
    vertex: int | None = None
    detail: str = ""


def common_neighbours(g: Graph, u: int, v: int) -> int:
    return (g.adj[u] & g.adj[v]).bit_count()


def verify_local_identities(g: Graph) -> IdentityReport:
    """Check deg(v) = sum of neighbour degrees - P3-end(v) - 2 triangles(v)
    at every vertex, and sum over edges of common neighbours = sum of
    per-vertex triangle counts. A failure points at the counting engine."""
    M = gds3(g).rows
    for v in range(g.n):
        deg, end, tri = M[v]
        rhs = sum(M[u][0] for u in iter_bits(g.adj[v])) - end - 2 * tri
        if deg != rhs:
            return IdentityReport(False, v, f"vertex {v}: degree {deg} != {rhs}")
    lhs = sum(common_neighbours(g, u, v) for u, v in g.edges())
    rhs = sum(r[2] for r in M)
    if lhs != rhs:
        return IdentityReport(False, None, f"edge-triangle incidences {lhs} != {rhs}")
    return IdentityReport(True)


def is_graphical(degrees: Sequence[int]) -> bool:
    """Havel-Hakimi test."""
    seq = sorted(degrees, reverse=True)
    if any(d < 0 for d in seq) or sum(seq) % 2:
        return False
    while seq and seq[0] > 0:
        d = seq.pop(0)
        if d > len(seq):
            return False
        for i in range(d):
            seq[i] -= 1
            if seq[i] < 0:
                return False
        seq.sort(reverse=True)
    return True


@dataclass
class FilterResult:
    passed: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.passed


def filter_candidate(M: Gds3Matrix) -> FilterResult:
    """Necessary conditions only; passing does not imply realizability.
    Every violated condition is listed in ``reason``."""
    if any(x < 0 for r in M.rows for x in r):
        return FilterResult(False, "negative entry")
    problems = []
    if not is_graphical([r[0] for r in M.rows]):
        problems.append("edge column is not a graphical degree sequence")
    tri_total = sum(r[2] for r in M.rows)
    if tri_total % 3:
        problems.append(f"triangle column sums to {tri_total}, not a multiple of 3")
    for v, r in enumerate(M.rows):
        if r[2] > comb(r[0], 2):
            problems.append(f"vertex {v}: {r[2]} triangles exceed C({r[0]}, 2)")
        if M.has_mid and r[3] != comb(r[0], 2) - r[2]:
            problems.append(f"vertex {v}: P3-middle {r[3]} != C({r[0]}, 2) - {r[2]}")
    return FilterResult(not problems, "; ".join(problems))


@lru_cache(maxsize=None)
def _realization_index(n: int) -> dict[tuple, Graph]:
    index: dict[tuple, Graph] = {}
    for g in all_graphs(n):
        index.setdefault(gds3(g).multiset(), g)
    return index


@dataclass
class Decision:
    status: str  # "realizable" | "no" | "undecided"
    witness: Graph | None = None
    reason: str = ""


def decide_realizability(M: Gds3Matrix) -> Decision:
    """Exhaustive decision up to vertex relabeling for n <= 8."""
    verdict = filter_candidate(M)
    if not verdict:
        return Decision("no", reason=verdict.reason)
    if M.n == 0:
        return Decision("no", reason="empty matrix")
    if M.n > MAX_EXHAUSTIVE_N:
        return Decision("undecided", reason=f"n={M.n} exceeds exhaustive range {MAX_EXHAUSTIVE_N}")
    witness = _realization_index(M.n).get(M.multiset())
    if witness is None:
        return Decision("no", reason=f"no graph on {M.n} vertices has this row multiset")
    return Decision("realizable", witness)

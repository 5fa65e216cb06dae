"""Graphlet degree sequences and distributions.

A vertex ``v`` touches graphlet ``g_i`` once for every vertex set ``S``
containing ``v`` such that ``H[S]`` is connected, isomorphic to ``U(g_i)``,
and ``v`` lies in the root orbit of ``g_i``. Counting is per vertex set, not
per embedding.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .canon import adjacency_code, canonical_code
from .catalog import MIN_SIZE, Catalog, describe
from .graph import Graph, GraphError, bfs_distances, is_connected_mask, iter_bits
from .subsets import connected_sets, rooted_connected_sets

INT64_MAX = np.iinfo(np.int64).max


class ConnectivityHypothesisError(ValueError):
    """A count that must divide exactly did not: the source graph lacks the assumed connectivity."""


@dataclass(eq=False)
class GddMatrix:
    """Per-vertex x per-graphlet count matrix; ``columns`` are graphlet indices."""

    counts: np.ndarray
    columns: tuple[int, ...]
    catalog: Catalog = field(repr=False)

    def __post_init__(self) -> None:
        self.counts = np.asarray(self.counts, dtype=np.int64)
        if self.counts.ndim != 2 or self.counts.shape[1] != len(self.columns):
            raise ValueError("counts shape does not match columns")
        self._col = {t: k for k, t in enumerate(self.columns)}

    @property
    def n(self) -> int:
        return self.counts.shape[0]

    @property
    def sizes(self) -> list[int]:
        return sorted({self.catalog.size_of(t) for t in self.columns})

    def col(self, theta: int) -> int:
        try:
            return self._col[theta]
        except KeyError:
            raise KeyError(f"graphlet {theta} is not a column of this matrix") from None

    def value(self, v: int, theta: int) -> int:
        return int(self.counts[v, self.col(theta)])

    def row(self, v: int) -> np.ndarray:
        return self.counts[v]

    def select(self, thetas: Sequence[int]) -> "GddMatrix":
        idx = [self.col(t) for t in thetas]
        return GddMatrix(self.counts[:, idx], tuple(thetas), self.catalog)

    def block(self, size: int) -> "GddMatrix":
        """Columns of graphlets with exactly ``size`` vertices."""
        thetas = [t for t in self.columns if self.catalog.size_of(t) == size]
        if not thetas:
            raise ValueError(f"matrix has no size-{size} columns")
        return self.select(thetas)

    def row_multiset(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(int(x) for x in r) for r in self.counts))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GddMatrix):
            return NotImplemented
        return self.columns == other.columns and np.array_equal(self.counts, other.counts)

    # --- export / import --------------------------------------------------

    def to_csv(self, przulj: bool = False) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if przulj:
            header = [self.catalog.to_przulj(t) for t in self.columns]
        else:
            header = list(self.columns)
        writer.writerow(["vertex"] + header)
        for v in range(self.n):
            writer.writerow([v] + [int(x) for x in self.counts[v]])
        return buf.getvalue()

    def to_dict(self, graph: Graph | None = None) -> dict:
        out = {
            "n": self.n,
            "max_size": max(self.sizes, default=0),
            "columns": list(self.columns),
            "rows": self.counts.tolist(),
            "catalog": {"max_size": self.catalog.max_size, "columns": describe(self.catalog, self.columns)},
        }
        if graph is not None:
            out["graph_code"] = canonical_code(graph).hex()
        return out

    def to_json(self, graph: Graph | None = None) -> str:
        return json.dumps(self.to_dict(graph), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict, catalog: Catalog) -> "GddMatrix":
        columns = tuple(int(t) for t in data["columns"])
        meta = data.get("catalog", {}).get("columns")
        if meta:
            for item, t in zip(meta, columns):
                expect = catalog.graph_classes[catalog.underlying(t)].code.hex()
                if item.get("code") != expect or item.get("orbit") != catalog.graphlet(t).orbit:
                    raise ValueError(f"column {t} metadata does not match this catalog")
        rows = data["rows"]
        counts = np.array(rows, dtype=np.int64).reshape(len(rows), len(columns))
        return cls(counts, columns, catalog)

    @classmethod
    def from_csv(cls, text: str, catalog: Catalog, przulj: bool = False) -> "GddMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        reader = list(csv.reader(lines))
        header = reader[0][1:]
        if przulj:
            columns = tuple(catalog.from_przulj(int(h)) for h in header)
        else:
            columns = tuple(int(h) for h in header)
        counts = np.array([[int(x) for x in r[1:]] for r in reader[1:]], dtype=np.int64)
        return cls(counts.reshape(len(reader) - 1, len(columns)), columns, catalog)


# --- counting kernel ---------------------------------------------------------


def _columns(catalog: Catalog, max_size: int) -> tuple[int, ...]:
    return tuple(range(catalog.theta_end(max_size)))


def _count_sets(g: Graph, masks: Sequence[int], catalog: Catalog, ncols: int, rows: list[list[int]]) -> None:
    adj = g.adj
    for mask in masks:
        k = mask.bit_count()
        if k < MIN_SIZE:
            continue
        verts = list(iter_bits(mask))
        thetas = catalog.pattern_thetas(k, adjacency_code(adj, verts))
        for v, t in zip(verts, thetas):
            if t < ncols:
                rows[v][t] += 1


def _to_array(rows: list[list[int]]) -> np.ndarray:
    if rows and max(max(r, default=0) for r in rows) > INT64_MAX:
        raise OverflowError("graphlet count exceeds 64-bit range")
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(rows[0]) if rows else 0)


def subset_counts(g: Graph, max_size: int, catalog: Catalog) -> GddMatrix:
    """Counts over all connected sets of size <= ``max_size``, with no
    connectivity or ``max_size < n`` precondition on ``g``."""
    if g.n > 32:
        raise GraphError("enumeration paths support n <= 32")
    cols = _columns(catalog, max_size)
    rows = [[0] * len(cols) for _ in range(g.n)]
    if cols:
        _count_sets(g, connected_sets(g.adj, max_size, MIN_SIZE), catalog, len(cols), rows)
    return GddMatrix(_to_array(rows) if g.n else np.zeros((0, len(cols)), np.int64), cols, catalog)


def rooted_counts(g: Graph, v: int, max_size: int, catalog: Catalog, allowed: int | None = None) -> np.ndarray:
    """One vertex's counts, optionally restricted to vertices in ``allowed``."""
    cols = _columns(catalog, max_size)
    row = [0] * len(cols)
    adj = g.adj
    for mask in rooted_connected_sets(adj, v, max_size, allowed):
        k = mask.bit_count()
        if k < MIN_SIZE:
            continue
        verts = list(iter_bits(mask))
        thetas = catalog.pattern_thetas(k, adjacency_code(adj, verts))
        row[thetas[verts.index(v)]] += 1
    return np.array(row, dtype=np.int64)


def _check_size(g: Graph, max_size: int, catalog: Catalog) -> None:
    if g.n > 32:
        raise GraphError("enumeration paths support n <= 32")
    if not g.is_connected():
        raise GraphError("graphlet degree distribution needs a connected graph")
    if max_size > g.n - 1:
        raise GraphError(f"graphlets are smaller than the graph: max_size {max_size} > n-1 = {g.n - 1}")
    if max_size > catalog.max_size:
        raise GraphError(f"catalog covers sizes up to {catalog.max_size}, requested {max_size}")


def _row_task(task) -> np.ndarray:
    g, v, max_size, catalog = task
    return rooted_counts(g, v, max_size, catalog)


def compute_gdd(g: Graph, max_size: int, catalog: Catalog, jobs: int = 1) -> GddMatrix:
    """The (<= max_size)-gdd of a connected graph, columns ordered by graphlet index.

    With ``jobs > 1`` rows are computed per root vertex in worker processes;
    the result is identical to the single-process path.
    """
    _check_size(g, max_size, catalog)
    if jobs <= 1 or g.n < 2:
        return subset_counts(g, max_size, catalog)
    tasks = [(g, v, max_size, catalog) for v in range(g.n)]
    with ProcessPoolExecutor(min(jobs, g.n)) as pool:
        rows = list(pool.map(_row_task, tasks))
    return GddMatrix(np.vstack(rows), _columns(catalog, max_size), catalog)


def oracle_gds(g: Graph, v: int, max_size: int, catalog: Catalog) -> np.ndarray:
    """Naive reference for one gdd row: every vertex subset through ``v``."""
    _check_size(g, max_size, catalog)
    cols = _columns(catalog, max_size)
    row = np.zeros(len(cols), dtype=np.int64)
    others = [u for u in range(g.n) if u != v]
    for size in range(MIN_SIZE, max_size + 1):
        for rest in combinations(others, size - 1):
            verts = (v,) + rest
            sub = g.induced(verts)
            if sub.is_connected():
                row[catalog.classify_rooted(sub, 0)] += 1
    return row


def gds(g: Graph, v: int, max_size: int, catalog: Catalog) -> np.ndarray:
    _check_size(g, max_size, catalog)
    return rooted_counts(g, v, max_size, catalog)


def rooted_census(g: Graph, v: int, max_size: int) -> dict[tuple, int]:
    """Catalog-free gds: counts keyed by ``(CanonicalCode, orbit index)``.

    Usable for graphs too large for a full catalog of their ``n - 1``.
    """
    from .canon import classify_pattern

    census: dict[tuple, int] = {}
    for mask in rooted_connected_sets(g.adj, v, max_size):
        k = mask.bit_count()
        if k < MIN_SIZE:
            continue
        verts = list(iter_bits(mask))
        code, orbit_id = classify_pattern(k, adjacency_code(g.adj, verts))
        key = (code, orbit_id[verts.index(v)])
        census[key] = census.get(key, 0) + 1
    return census


# --- projection lemmas ---------------------------------------------------------


def project_gdd(block: GddMatrix, n: int, k: int) -> GddMatrix:
    """Recover the (<= n-k)-gdd from the exact size-(n-k+1) block of a
    k-vertex-connected graph.

    Each size-l graphlet at ``v`` is contained in C(n-l, k-1) graphlets of
    size n-k+1 rooted at ``v`` (choose the k-1 excluded vertices), so summing
    containment over the block and dividing recovers the smaller counts.
    """
    cat = block.catalog
    top = n - k + 1
    if k < 2:
        raise ValueError("projection needs k >= 2")
    if any(cat.size_of(t) != top for t in block.columns):
        raise ValueError(f"projection needs exactly the size-{top} block")
    if block.n != n:
        raise ValueError(f"matrix has {block.n} rows, expected n={n}")
    out_cols = _columns(cat, top - 1)
    acc = np.zeros((n, len(out_cols)), dtype=object)
    for c, j in enumerate(block.columns):
        colvals = block.counts[:, c]
        if not colvals.any():
            continue
        for i, mult in cat.root_counts_row(j).items():
            if i < len(out_cols):
                acc[:, i] += colvals.astype(object) * mult
    result = np.zeros_like(acc)
    for i in out_cols:
        denom = comb(n - cat.size_of(i), k - 1)
        for v in range(n):
            q, r = divmod(acc[v, i], denom)
            if r:
                raise ConnectivityHypothesisError(
                    f"vertex {v}, graphlet {i}: {acc[v, i]} not divisible by {denom}; "
                    f"graph is not {k}-vertex-connected"
                )
            result[v, i] = q
    return GddMatrix(result.astype(np.int64), out_cols, cat)


# --- vertex deletion -----------------------------------------------------------------


@dataclass
class DeletionDelta:
    v: int
    x: int
    distance: int
    columns: tuple[int, ...]
    delta: np.ndarray  # D_g[v] - D_{g-x}[v]
    root_eccentricity: tuple[int, ...]

    @property
    def decreased(self) -> list[int]:
        return [t for t, d in zip(self.columns, self.delta) if d]

    @property
    def nonnegative(self) -> bool:
        return bool((self.delta >= 0).all())

    @property
    def localized(self) -> bool:
        """Every decreased class has root eccentricity >= d(v, x)."""
        return all(e >= self.distance for e, d in zip(self.root_eccentricity, self.delta) if d)

    @property
    def exactly_at_distance(self) -> bool:
        """Every decreased class has root eccentricity exactly d(v, x)."""
        return all(e == self.distance for e, d in zip(self.root_eccentricity, self.delta) if d)


def deletion_delta(g: Graph, v: int, x: int, max_size: int, catalog: Catalog) -> DeletionDelta:
    """Change of ``v``'s counts when vertex ``x`` is deleted.

    Counts in ``g - x`` are taken over vertex sets avoiding ``x``, which may
    include the whole of ``g - x``.
    """
    _check_size(g, max_size, catalog)
    if v == x:
        raise ValueError("v and x must differ")
    full = (1 << g.n) - 1
    rest = full & ~(1 << x)
    if not is_connected_mask(g.adj, rest):
        raise GraphError(f"deleting {x} disconnects the graph; use articulation analysis")
    before = rooted_counts(g, v, max_size, catalog)
    after = rooted_counts(g, v, max_size, catalog, allowed=rest)
    cols = _columns(catalog, max_size)
    ecc = tuple(catalog.graphlet(t).root_eccentricity for t in cols)
    return DeletionDelta(v, x, bfs_distances(g, v)[x], cols, before - after, ecc)


def cumulative_bound(n: int, size: int) -> int:
    """Upper bound C(n-1, size-1) on any entry of a size-``size`` column."""
    return comb(n - 1, size - 1)

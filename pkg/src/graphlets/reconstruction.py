"""Reconstruction from graphlet degree distributions.

* the deck of a 2-connected graph from its size-(n-1) block;
* trees from their (<= n-1)-gdd, by peeling maximal branches at a centre;
* 2-connected graphs with a rigid vertex-deleted subgraph whose rootings are
  touched consistently by every vertex (condition (*)).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field

import numpy as np

from .canon import CanonicalCode, canonical_form
from .catalog import Catalog, CatalogError
from .connectivity import IntegrityError, articulation_analysis
from .engine import ConnectivityHypothesisError, GddMatrix, compute_gdd, project_gdd, rooted_counts
from .graph import Graph, vertex_connectivity


class ReconstructionError(ValueError):
    """The matrix does not satisfy the hypotheses of the requested reconstruction."""


# --- deck --------------------------------------------------------------------------


def deck_from_gdd(block: GddMatrix, n: int) -> Counter:
    """Multiset of vertex-deleted subgraphs (by canonical code) of a 2-connected graph."""
    cat = block.catalog
    if any(cat.size_of(t) != n - 1 for t in block.columns):
        raise ValueError(f"deck extraction needs exactly the size-{n - 1} block")
    totals: Counter = Counter()
    for t, s in zip(block.columns, block.counts.sum(axis=0)):
        if s:
            totals[cat.underlying(t)] += int(s)
    deck: Counter = Counter()
    for gamma, total in totals.items():
        q, r = divmod(total, n - 1)
        if r:
            raise ConnectivityHypothesisError(
                f"class {gamma}: {total} rooted copies not divisible by n-1={n - 1}; graph is not 2-connected"
            )
        deck[cat.graph_classes[gamma].code] = q
    if sum(deck.values()) != n:
        raise ConnectivityHypothesisError(f"deck has {sum(deck.values())} cards, expected {n}")
    return deck


def true_deck(g: Graph) -> Counter:
    return Counter(canonical_form(g.delete_vertex(v)).code for v in range(g.n))


# --- trees ---------------------------------------------------------------------------


def _path_end_thetas(cat: Catalog, top: int) -> dict[int, int]:
    """theta -> size for path-end graphlets of size <= top."""
    out = {}
    for gc in cat.graph_classes:
        if gc.size > top:
            break
        g = gc.graph
        if g.m == g.n - 1 and max(g.degrees()) <= 2:
            for t in gc.theta:
                if cat.graphlet(t).root_degree == 1:
                    out[t] = gc.size
    return out


def _is_trunked(cat: Catalog, theta: int) -> bool:
    gl = cat.graphlet(theta)
    g = cat.graph_classes[gl.gamma].graph
    return g.m == g.n - 1 and gl.root_degree == 1


def reconstruct_tree(D: GddMatrix, n: int) -> Graph:
    """Rebuild a tree on ``n >= 3`` vertices from its (<= n-1)-gdd."""
    cat = D.catalog
    if n < 3:
        raise ReconstructionError("tree reconstruction needs n >= 3")
    if D.n != n:
        raise ValueError(f"matrix has {D.n} rows, expected n={n}")
    expected = tuple(range(cat.theta_end(n - 1)))
    if D.columns != expected:
        raise ValueError("tree reconstruction needs the full (<= n-1)-gdd")
    degrees = [int(d) for d in D.counts[:, 0]]
    if sum(degrees) != 2 * (n - 1):
        raise ReconstructionError("degree column does not describe a tree")
    if max(degrees) <= 2:
        # a path: longest path-end lengths are truncated at n-1, so no centre test
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    path_ends = _path_end_thetas(cat, n - 1)

    def lp(v: int) -> int:
        nz = [t for t in path_ends if D.counts[v, t]]
        return path_ends[max(nz)] if nz else 1

    lps = [lp(v) for v in range(n)]
    c = min(range(n), key=lambda v: (lps[v], v))

    residual = D.counts[c].copy()
    trunked = [t for t in expected if _is_trunked(cat, t)]
    edges: list[tuple[int, int]] = []
    next_id = 1  # vertex 0 is the centre
    while True:
        live = [t for t in trunked if residual[t] > 0]
        if not live:
            break
        k = max(live)
        gl = cat.graphlet(k)
        branch = cat.graph_classes[gl.gamma].graph
        ids = {}
        for u in range(branch.n):
            if u == gl.root:
                ids[u] = 0
            else:
                ids[u] = next_id
                next_id += 1
        edges += [(ids[a], ids[b]) for a, b in branch.edges()]
        sub = rooted_counts(branch, gl.root, min(branch.n, n - 1), cat)
        residual[: len(sub)] -= sub
        if (residual < 0).any():
            raise ReconstructionError("residual went negative: not the gdd of a tree")
    if next_id != n:
        raise ReconstructionError(f"rebuilt {next_id} vertices, expected {n}")
    return Graph.from_edges(n, edges)


# --- asymmetric vertex-deleted subgraphs --------------------------------------------------


@dataclass
class ReconstructionReport:
    graph: Graph | None
    failure: str | None = None
    stage: str | None = None
    certificate: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.graph is not None

    def to_dict(self) -> dict:
        from .formats import write_graph6

        return {
            "ok": self.ok,
            "graph6": write_graph6(self.graph) if self.graph is not None else None,
            "failure": self.failure,
            "stage": self.stage,
            "certificate": self.certificate,
        }


def _class_rows(D: GddMatrix, gamma: int) -> tuple[np.ndarray, tuple[int, ...]]:
    thetas = D.catalog.graph_classes[gamma].theta
    return D.counts[:, [D.col(t) for t in thetas]], thetas


def check_condition_star(D: GddMatrix, theta: int) -> bool:
    """Matrix-side test of condition (*) for the rigid class underlying ``theta``.

    Every row may touch the class at one rooting at most; with ``k`` deletions
    yielding the class, the deleted vertices' rows sum to k-1 and the rest to k
    (for k = 1 the deleted vertex's row is all zero).
    """
    return _star_details(D, theta) is not None


def _star_details(D: GddMatrix, theta: int):
    cat = D.catalog
    gl = cat.graphlet(theta)
    gc = cat.graph_classes[gl.gamma]
    n = D.n
    if gc.size != n - 1:
        raise CatalogError(f"graphlet {theta} has size {gc.size}, expected n-1={n - 1}")
    if not gc.rigid:
        raise CatalogError(f"class of graphlet {theta} is not rigid")
    sub, thetas = _class_rows(D, gc.gamma)
    if (np.count_nonzero(sub, axis=1) > 1).any():
        return None
    total = int(sub.sum())
    if total == 0 or total % (n - 1):
        return None
    k = total // (n - 1)
    sums = sub.sum(axis=1)
    deleted = [w for w in range(n) if sums[w] == k - 1]
    if len(deleted) != k or any(sums[w] not in (k, k - 1) for w in range(n)):
        return None
    orbit = {w: int(np.flatnonzero(sub[w])[0]) for w in range(n) if sums[w]}
    return k, deleted, orbit


def reconstruct_asymmetric(D: GddMatrix, n: int) -> ReconstructionReport:
    """Rebuild a 2-connected graph with a rigid vertex-deleted subgraph satisfying (*)."""
    cat = D.catalog
    if D.n != n:
        raise ValueError(f"matrix has {D.n} rows, expected n={n}")
    cert: dict = {"n": n}
    try:
        block = D.block(n - 1)
    except ValueError:
        return ReconstructionReport(None, "matrix lacks the size-(n-1) block", "input", cert)

    report = articulation_analysis(block, n)
    cert["two_connected"] = report.verdict == "k_connected"
    if not cert["two_connected"]:
        return ReconstructionReport(None, "graph is not 2-connected", "connectivity", cert)

    present = sorted({cat.underlying(t) for t, s in zip(block.columns, block.counts.sum(axis=0)) if s})
    rigid = [g for g in present if cat.graph_classes[g].rigid]
    cert["rigid_classes"] = rigid
    qualifying = [g for g in rigid if check_condition_star(D, cat.graph_classes[g].theta[0])]
    cert["qualifying_classes"] = qualifying
    if not qualifying:
        reason = "no qualifying class: " + ("no rigid size-(n-1) class" if not rigid else "condition (*) fails")
        return ReconstructionReport(None, reason, "hypotheses", cert)

    gamma = qualifying[0]
    gc = cat.graph_classes[gamma]
    k, deleted, orbit = _star_details(D, gc.theta[0])
    v = deleted[0]
    cert.update(
        chosen_class=gamma,
        chosen_theta=gc.theta[0],
        chosen_code=gc.code.hex(),
        k=k,
        deletion_rows=deleted,
        deleted_row=v,
        orbit_of_row={w: orbit[w] for w in range(n) if w != v},
    )

    try:
        degrees = project_gdd(block, n, 2).counts[:, 0] if n - 2 >= 2 else None
    except ConnectivityHypothesisError as exc:
        return ReconstructionReport(None, str(exc), "projection", cert)
    if degrees is None:
        return ReconstructionReport(None, "n too small for degree projection", "projection", cert)
    if 0 in D.columns and not np.array_equal(D.counts[:, D.col(0)], degrees):
        return ReconstructionReport(None, "projected degrees disagree with the edge column", "projection", cert)

    h_asym = gc.graph
    rest = [w for w in range(n) if w != v]
    # rigid: orbit index o is the single canonical vertex with orbit_of == o
    vertex_of_orbit = {o: u for u, o in enumerate(gc.orbit_of)}
    position = {w: vertex_of_orbit[orbit[w]] for w in rest}
    if len(set(position.values())) != n - 1:
        return ReconstructionReport(None, "rows do not map to distinct vertices", "mapping", cert)
    edges = [(a, b) for a in rest for b in rest if a < b and h_asym.has_edge(position[a], position[b])]
    joined = []
    for w in rest:
        diff = int(degrees[w]) - h_asym.degree(position[w])
        if diff == 1:
            joined.append(w)
        elif diff != 0:
            return ReconstructionReport(None, f"row {w}: degree gap {diff} is not 0 or 1", "degrees", cert)
    if len(joined) != int(degrees[v]):
        return ReconstructionReport(None, "deleted vertex degree disagrees with its neighbours", "degrees", cert)
    cert["neighbours_of_deleted"] = joined
    g = Graph.from_edges(n, edges + [(v, w) for w in joined])

    top = max(D.sizes)
    again = compute_gdd(g, top, cat).select(list(D.columns))
    if again != D:
        return ReconstructionReport(None, "recomputed gdd differs from the input", "verification", cert)
    cert["verified"] = True
    return ReconstructionReport(g, certificate=cert)


# --- graph-side oracle -------------------------------------------------------------------


@dataclass
class HypothesisScan:
    """Theorem hypotheses evaluated directly on the graph (test oracle)."""

    two_connected: bool
    rigid_classes: list[int]
    qualifying_classes: list[int]
    chosen_class: int | None = None
    k: int | None = None
    deletion_vertices: list[int] = field(default_factory=list)
    orbit_of_vertex: dict[int, int] = field(default_factory=dict)
    twins: bool | None = None

    @property
    def satisfied(self) -> bool:
        return self.two_connected and bool(self.qualifying_classes)

    def to_dict(self) -> dict:
        return asdict(self)


def hypothesis_scan(g: Graph, cat: Catalog) -> HypothesisScan:
    n = g.n
    two = n >= 3 and vertex_connectivity(g) >= 2
    forms = [canonical_form(g.delete_vertex(x)) for x in range(n)]
    by_class: dict[int, list[int]] = {}
    for x, form in enumerate(forms):
        try:
            gamma = cat.gamma_of(form.code)
        except CatalogError:
            continue  # disconnected deletion
        by_class.setdefault(gamma, []).append(x)
    rigid = sorted(gm for gm in by_class if cat.graph_classes[gm].rigid)
    qualifying = []
    details = {}
    for gamma in rigid:
        xs = by_class[gamma]
        seen: dict[int, int] = {}
        ok = True
        for x in xs:
            form = forms[x]
            for idx, w in enumerate(v for v in range(n) if v != x):
                o = form.orbit_id[idx]
                if seen.setdefault(w, o) != o:
                    ok = False
        if ok:
            qualifying.append(gamma)
            details[gamma] = (xs, seen)
    scan = HypothesisScan(two, rigid, qualifying)
    if qualifying:
        gamma = qualifying[0]
        xs, seen = details[gamma]
        scan.chosen_class = gamma
        scan.k = len(xs)
        scan.deletion_vertices = list(xs)
        scan.orbit_of_vertex = dict(sorted(seen.items()))
        scan.twins = all(g.adj[a] == g.adj[b] for a in xs for b in xs if a < b)
    return scan


def certificate_agrees(report: ReconstructionReport, scan: HypothesisScan) -> bool:
    """Matrix-side certificate versus graph-side oracle, hypothesis by hypothesis."""
    cert = report.certificate
    if cert.get("two_connected") != scan.two_connected:
        return False
    if not scan.two_connected:
        return True
    if cert.get("rigid_classes") != scan.rigid_classes or cert.get("qualifying_classes") != scan.qualifying_classes:
        return False
    if not scan.qualifying_classes:
        return True
    if (cert.get("chosen_class"), cert.get("k"), cert.get("deletion_rows")) != (
        scan.chosen_class, scan.k, scan.deletion_vertices
    ):
        return False
    return all(scan.orbit_of_vertex.get(w) == o for w, o in cert["orbit_of_row"].items())

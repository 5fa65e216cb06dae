"""Deterministic orderings of graph classes and graphlet (rooted) classes.

Graph classes of sizes ``2..max_size`` are ordered by (size, edge count,
canonical code). Each automorphism orbit of a class gives one graphlet
class; within a class, orbits are ordered by their smallest canonical
label. Graph class indices are called ``gamma`` and graphlet class indices
``theta`` throughout the package.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .canon import CanonicalCode, adjacency_code, canonical_form, classify_pattern, graph_from_code
from .generate import connected_graphs
from .graph import Graph, GraphError, bfs_distances, iter_bits
from .subsets import rooted_connected_sets

MIN_SIZE = 2
MAX_SIZE = 9
CATALOG_FORMAT = "graphlets-catalog/1"
CACHE_ENV = "GRAPHLETS_CACHE_DIR"


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class GraphClass:
    gamma: int
    code: CanonicalCode
    graph: Graph  # canonical representative; vertex i has canonical label i
    orbit_of: tuple[int, ...]
    theta: tuple[int, ...]  # graphlet index of each orbit
    przulj_graph: int | None = None

    @property
    def size(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> int:
        return self.graph.m

    @property
    def orbit_sizes(self) -> list[int]:
        sizes = [0] * len(self.theta)
        for o in self.orbit_of:
            sizes[o] += 1
        return sizes

    @property
    def rigid(self) -> bool:
        return len(self.theta) == self.size


@dataclass(frozen=True)
class GraphletClass:
    theta: int
    gamma: int
    orbit: int
    root: int  # smallest canonical label in the orbit
    size: int
    root_degree: int
    orbit_size: int
    root_eccentricity: int
    przulj: int | None = None


@dataclass
class Catalog:
    max_size: int
    graph_classes: list[GraphClass]
    graphlet_classes: list[GraphletClass]
    _gamma_by_code: dict[CanonicalCode, int] = field(default_factory=dict, repr=False)
    _pattern_memo: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict, repr=False)
    _root_counts: dict[int, dict[int, int]] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self._gamma_by_code:
            self._gamma_by_code = {gc.code: gc.gamma for gc in self.graph_classes}
        self._theta_end = {}
        self._gamma_end = {}
        for gc in self.graph_classes:
            self._gamma_end[gc.size] = gc.gamma + 1
            self._theta_end[gc.size] = gc.theta[-1] + 1
        self._przulj_to_theta = {
            gl.przulj: gl.theta for gl in self.graphlet_classes if gl.przulj is not None
        }

    # --- ranges -----------------------------------------------------------

    def theta_end(self, size: int) -> int:
        """Number of graphlet classes of size <= ``size``."""
        if size < MIN_SIZE:
            return 0
        if size > self.max_size:
            raise CatalogError(f"catalog covers sizes up to {self.max_size}, not {size}")
        return self._theta_end[size]

    def theta_range(self, size: int) -> range:
        return range(self.theta_end(size - 1), self.theta_end(size))

    def gamma_end(self, size: int) -> int:
        if size < MIN_SIZE:
            return 0
        if size > self.max_size:
            raise CatalogError(f"catalog covers sizes up to {self.max_size}, not {size}")
        return self._gamma_end[size]

    def gamma_range(self, size: int) -> range:
        return range(self.gamma_end(size - 1), self.gamma_end(size))

    def underlying(self, theta: int) -> int:
        return self.graphlet_classes[theta].gamma

    def graphlet(self, theta: int) -> GraphletClass:
        if not 0 <= theta < len(self.graphlet_classes):
            raise CatalogError(f"graphlet index {theta} out of range")
        return self.graphlet_classes[theta]

    def size_of(self, theta: int) -> int:
        return self.graphlet_classes[theta].size

    # --- classification ---------------------------------------------------

    def gamma_of(self, code: CanonicalCode) -> int:
        try:
            return self._gamma_by_code[code]
        except KeyError:
            raise CatalogError(f"no connected class with code {code.hex()} in catalog") from None

    def classify_graph(self, g: Graph) -> int:
        if not g.is_connected():
            raise CatalogError("graph classes are connected graphs only")
        if not MIN_SIZE <= g.n <= self.max_size:
            raise CatalogError(f"size {g.n} outside catalog range {MIN_SIZE}..{self.max_size}")
        return self.gamma_of(canonical_form(g).code)

    def classify_rooted(self, g: Graph, root: int) -> int:
        """Graphlet index of ``(g, root)``."""
        if not g.is_connected():
            raise CatalogError("graphlets are connected")
        if not MIN_SIZE <= g.n <= self.max_size:
            raise CatalogError(f"size {g.n} outside catalog range {MIN_SIZE}..{self.max_size}")
        form = canonical_form(g)
        gc = self.graph_classes[self.gamma_of(form.code)]
        return gc.theta[form.orbit_id[root]]

    def pattern_thetas(self, size: int, bits: int) -> tuple[int, ...]:
        """Graphlet index for each position of a connected labeled pattern."""
        key = (size, bits)
        hit = self._pattern_memo.get(key)
        if hit is None:
            code, orbit_id = classify_pattern(size, bits)
            gc = self.graph_classes[self.gamma_of(code)]
            hit = tuple(gc.theta[o] for o in orbit_id)
            self._pattern_memo[key] = hit
        return hit

    # --- containment constants --------------------------------------------

    def root_counts_row(self, j: int) -> dict[int, int]:
        """``{i: c(j -> i)}`` over graphlets ``i`` no larger than ``j``.

        ``c(j -> i)`` counts vertex sets ``S`` of ``U(g_j)`` containing the
        root of ``g_j`` whose induced rooted graph is ``g_i``.
        """
        row = self._root_counts.get(j)
        if row is None:
            gl = self.graphlet(j)
            g = self.graph_classes[gl.gamma].graph
            row = {}
            for mask in rooted_connected_sets(g.adj, gl.root, gl.size):
                k = mask.bit_count()
                if k < MIN_SIZE:
                    continue
                verts = list(iter_bits(mask))
                thetas = self.pattern_thetas(k, adjacency_code(g.adj, verts))
                i = thetas[verts.index(gl.root)]
                row[i] = row.get(i, 0) + 1
            self._root_counts[j] = row
        return row

    def root_counts_within(self, j: int, i: int) -> int:
        gj, gi = self.graphlet(j), self.graphlet(i)
        if gi.size > gj.size:
            raise CatalogError(f"graphlet {i} is larger than graphlet {j}")
        return self.root_counts_row(j).get(i, 0)

    # --- Przulj numbering --------------------------------------------------

    def to_przulj(self, theta: int) -> int:
        p = self.graphlet(theta).przulj
        if p is None:
            raise CatalogError(f"graphlet {theta} has no Przulj orbit number (size > 5)")
        return p

    def from_przulj(self, orbit: int) -> int:
        try:
            return self._przulj_to_theta[orbit]
        except KeyError:
            raise CatalogError(f"Przulj orbit {orbit} not in this catalog") from None

    def przulj_graph_of(self, gamma: int) -> int:
        p = self.graph_classes[gamma].przulj_graph
        if p is None:
            raise CatalogError(f"graph class {gamma} has no Przulj number (size > 5)")
        return p

    # --- export -----------------------------------------------------------

    def to_dict(self) -> dict:
        classes = []
        for gc in self.graph_classes:
            entry = {
                "gamma": gc.gamma,
                "theta": list(gc.theta),
                "code": gc.code.hex(),
                "size": gc.size,
                "edges": gc.edges,
                "orbits": list(gc.orbit_of),
                "orbit_sizes": gc.orbit_sizes,
            }
            if gc.przulj_graph is not None:
                entry["przulj_graph"] = gc.przulj_graph
                entry["przulj_id"] = [self.graphlet_classes[t].przulj for t in gc.theta]
            classes.append(entry)
        return {"format": CATALOG_FORMAT, "max_size": self.max_size, "classes": classes}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Catalog":
        if data.get("format") != CATALOG_FORMAT:
            raise CatalogError(f"unknown catalog format {data.get('format')!r}")
        raw = []
        for entry in data["classes"]:
            code = CanonicalCode.from_hex(entry["code"])
            raw.append((code, graph_from_code(code.size, code.bits), tuple(entry["orbits"])))
        return _assemble(int(data["max_size"]), raw)


# --- construction -------------------------------------------------------------


def _przulj_table() -> list[dict]:
    text = resources.files("graphlets").joinpath("data/przulj5.json").read_text()
    return json.loads(text)["graphs"]


def _assemble(max_size: int, raw: Sequence[tuple[CanonicalCode, Graph, tuple[int, ...]]]) -> Catalog:
    graph_classes = []
    graphlets = []
    for gamma, (code, g, orbit_of) in enumerate(raw):
        n_orb = max(orbit_of) + 1
        thetas = tuple(range(len(graphlets), len(graphlets) + n_orb))
        graph_classes.append(GraphClass(gamma, code, g, orbit_of, thetas))
        for o, theta in enumerate(thetas):
            members = [v for v in range(g.n) if orbit_of[v] == o]
            root = members[0]
            graphlets.append(
                GraphletClass(
                    theta=theta,
                    gamma=gamma,
                    orbit=o,
                    root=root,
                    size=g.n,
                    root_degree=g.degree(root),
                    orbit_size=len(members),
                    root_eccentricity=max(bfs_distances(g, root)),
                )
            )
    _attach_przulj(graph_classes, graphlets)
    return Catalog(max_size, graph_classes, graphlets)


def _attach_przulj(graph_classes: list[GraphClass], graphlets: list[GraphletClass]) -> None:
    """Attach Przulj numbers to classes of size <= 5, validating structure."""
    by_code = {gc.code: gc for gc in graph_classes}
    top = max((gc.size for gc in graph_classes), default=0)
    seen_orbits = set()
    for entry in _przulj_table():
        if entry["size"] > top:
            continue
        g = Graph.from_edges(entry["size"], entry["edge_list"])
        form = canonical_form(g)
        gc = by_code.get(form.code)
        if gc is None or gc.size != entry["size"] or gc.edges != entry["edges"]:
            raise CatalogError(f"Przulj graph G{entry['graph']} does not match any catalog class")
        # form.orbit_id indexes orbits in canonical order, same as the catalog's
        mapping: dict[int, int] = {}
        for v, p in enumerate(entry["vertex_orbit"]):
            o = form.orbit_id[v]
            if mapping.setdefault(p, o) != o:
                raise CatalogError(f"Przulj orbit {p} splits a catalog orbit")
        if len(set(mapping.values())) != len(mapping) or len(mapping) != len(gc.theta):
            raise CatalogError(f"Przulj orbits of G{entry['graph']} are not a bijection")
        declared = {o["orbit"]: o for o in entry["orbits"]}
        for p, o in mapping.items():
            gl = graphlets[gc.theta[o]]
            d = declared[p]
            if d["root_degree"] != gl.root_degree or d["orbit_size"] != gl.orbit_size:
                raise CatalogError(f"Przulj orbit {p}: degree/orbit size mismatch")
            graphlets[gl.theta] = GraphletClass(**{**gl.__dict__, "przulj": p})
            seen_orbits.add(p)
        graph_classes[gc.gamma] = GraphClass(
            gc.gamma, gc.code, gc.graph, gc.orbit_of, gc.theta, przulj_graph=entry["graph"]
        )
    small = [gl for gl in graphlets if gl.size <= 5]
    if len(seen_orbits) != len(small):
        raise CatalogError("Przulj table does not cover every graphlet of size <= 5")


def build_catalog(max_size: int) -> Catalog:
    """Enumerate all connected classes of sizes 2..max_size and index them."""
    if not MIN_SIZE <= max_size <= MAX_SIZE:
        raise CatalogError(f"max_size must be in {MIN_SIZE}..{MAX_SIZE}, got {max_size}")
    raw = []
    for size in range(MIN_SIZE, max_size + 1):
        for g in connected_graphs(size):
            form = canonical_form(g)
            raw.append((form.code, g, form.orbit_id))
    return _assemble(max_size, raw)


def default_cache_dir() -> Path | None:
    value = os.environ.get(CACHE_ENV)
    return Path(value) if value else None


_loaded: dict[int, Catalog] = {}


def load_catalog(max_size: int, cache_dir: str | Path | None = None) -> Catalog:
    """Catalog for ``max_size``, memoized in-process and optionally on disk.

    A cached catalog for a larger size is reused by truncation.
    """
    if max_size in _loaded:
        return _loaded[max_size]
    for size, cat in sorted(_loaded.items()):
        if size > max_size:
            _loaded[max_size] = truncate(cat, max_size)
            return _loaded[max_size]
    cache = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    path = cache / f"catalog-{max_size}.json" if cache is not None else None
    if path is not None and path.exists():
        cat = Catalog.from_dict(json.loads(path.read_text()))
    else:
        cat = build_catalog(max_size)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(cat.to_json())
            tmp.replace(path)
    _loaded[max_size] = cat
    return cat


def truncate(cat: Catalog, max_size: int) -> Catalog:
    """Sub-catalog for sizes <= max_size; indices are unchanged."""
    raw = [(gc.code, gc.graph, gc.orbit_of) for gc in cat.graph_classes if gc.size <= max_size]
    return _assemble(max_size, raw)


def describe(cat: Catalog, thetas: Iterable[int]) -> list[dict]:
    """Column metadata for matrix exports."""
    out = []
    for t in thetas:
        gl = cat.graphlet(t)
        item = {
            "theta": t,
            "gamma": gl.gamma,
            "size": gl.size,
            "code": cat.graph_classes[gl.gamma].code.hex(),
            "orbit": gl.orbit,
        }
        if gl.przulj is not None:
            item["przulj"] = gl.przulj
        out.append(item)
    return out

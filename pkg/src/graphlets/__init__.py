"""Graphlet degree sequences and what they determine about a small graph."""

from .canon import CanonicalCode, canonical_code, canonical_form, isomorphic
from .catalog import Catalog, build_catalog, load_catalog
from .connectivity import articulation_analysis, cut_core_vertices, k_connectivity_from_gdd
from .engine import GddMatrix, compute_gdd, gds, project_gdd
from .feasibility import decide_realizability, filter_candidate, verify_local_identities
from .formats import parse_graph6, read_graph, write_graph6
from .graph import Graph
from .motifs import find_distinguishing_pair, motifs_from_gdd
from .reconstruction import deck_from_gdd, reconstruct_asymmetric, reconstruct_tree
from .uniqueness import collision_search, same_gds_pair

__version__ = "0.1.0"

__all__ = [
    "CanonicalCode", "Catalog", "GddMatrix", "Graph",
    "articulation_analysis", "build_catalog", "canonical_code", "canonical_form",
    "collision_search", "compute_gdd", "cut_core_vertices", "deck_from_gdd",
    "decide_realizability", "filter_candidate", "find_distinguishing_pair", "gds",
    "isomorphic", "k_connectivity_from_gdd", "load_catalog", "motifs_from_gdd",
    "parse_graph6", "project_gdd", "read_graph", "reconstruct_asymmetric",
    "reconstruct_tree", "same_gds_pair", "verify_local_identities", "write_graph6",
]

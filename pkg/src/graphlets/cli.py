"""Command-line entry point: ``graphlets <subcommand> ...``.

Exit codes: 0 success, 1 domain failure (hypotheses not met, a check
failed, a matrix is not realizable), 2 usage or input error. Errors go to
stderr as a single line ``graphlets: error[<kind>]: <message>``.

Every artifact carries a manifest: a leading ``# manifest: {...}`` line in
text and CSV output, a ``manifest`` key in JSON, and the first line of a
JSON-lines stream. The manifest holds no paths, timestamps or worker
counts, so outputs are byte-identical across runs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from collections import Counter
from pathlib import Path

from . import __version__
from .canon import isomorphic
from .catalog import MAX_SIZE, CatalogError, load_catalog
from .connectivity import IntegrityError, articulation_analysis, cut_core_report
from .engine import ConnectivityHypothesisError, GddMatrix, compute_gdd, project_gdd, rooted_census
from .feasibility import Gds3Matrix, decide_realizability, filter_candidate, verify_local_identities
from .formats import FormatError, parse_edge_list, read_graph6_lines, write_graph6
from .generate import connected_graphs
from .graph import Graph, GraphError, vertex_connectivity
from .motifs import motifs_from_gdd
from .reconstruction import (
    ReconstructionError,
    certificate_agrees,
    deck_from_gdd,
    hypothesis_scan,
    reconstruct_asymmetric,
    reconstruct_tree,
)
from .uniqueness import collision_search, same_gds_pair

PROG = "graphlets"
PRZULJ_MAX = 5
DEFAULT_MAX_SIZE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


# --- I/O helpers -----------------------------------------------------------------


class Run:
    """State shared by one invocation: inputs read, catalog used, output sink."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.inputs: dict[str, str] = {}
        self.catalog_size: int | None = None
        self.lines: list[str] = []

    def read(self, path: str) -> str:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            try:
                data = Path(path).read_bytes()
            except OSError as exc:
                raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        self.inputs[f"input{len(self.inputs)}"] = hashlib.sha256(data).hexdigest()
        return data.decode("ascii", errors="replace")

    def catalog(self, max_size: int):
        if max_size > MAX_SIZE:
            raise UsageError(f"max size {max_size} exceeds the supported {MAX_SIZE}")
        self.catalog_size = max(self.catalog_size or 0, max_size)
        return load_catalog(max_size, self.args.cache_dir)

    def manifest(self) -> dict:
        skip = {"command", "func", "inp", "out", "jobs", "cache_dir", "timing"}
        flags = {k: v for k, v in sorted(vars(self.args).items()) if k not in skip}
        return {
            "command": self.args.command,
            "flags": flags,
            "inputs": self.inputs,
            "catalog_max_size": self.catalog_size,
            "version": __version__,
        }

    def emit(self, text: str) -> None:
        self.lines.append(text)

    def finish_text(self) -> str:
        return f"# manifest: {json.dumps(self.manifest(), sort_keys=True)}\n" + "".join(self.lines)

    def finish_json(self, payload: dict) -> str:
        return json.dumps({"manifest": self.manifest(), **payload}, sort_keys=True, indent=1) + "\n"

    def finish_jsonl(self) -> str:
        head = json.dumps({"manifest": self.manifest()}, sort_keys=True)
        return head + "\n" + "".join(self.lines)


def _write(args, text: str) -> None:
    if args.out and args.out != "-":
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_graphs(text: str) -> list[Graph]:
    """Newline-delimited graph6, or a single edge list."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise UsageError("input is empty")
    if lines[0].lstrip().startswith("{"):
        raise UsageError("expected graphs, got JSON")
    if lines[0].strip()[0].isdigit():
        return [parse_edge_list("\n".join(lines))]
    return list(read_graph6_lines(lines))


def _input_text(run: Run) -> str:
    if run.args.inp is None:
        raise UsageError("--in is required")
    return run.read(run.args.inp)


def _graphs(run: Run) -> list[Graph]:
    return _parse_graphs(_input_text(run))


def _label(graphs: list, i: int, g: Graph | None) -> str:
    if len(graphs) == 1:
        return ""
    return (write_graph6(g) if g is not None else f"matrix{i}") + "\t"


def _sources(run: Run, size_for_n) -> list[tuple[Graph | None, int, GddMatrix]]:
    """Graphs (computed to ``size_for_n(n)``) or gdd matrices from JSON."""
    text = _input_text(run)
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        out = []
        for m in data.get("results", [data]):
            cat = run.catalog(int(m.get("catalog", {}).get("max_size", m["max_size"])))
            D = GddMatrix.from_dict(m, cat)
            out.append((None, D.n, D))
        return out
    out = []
    for g in _parse_graphs(text):
        size = size_for_n(g.n)
        out.append((g, g.n, compute_gdd(g, size, run.catalog(size))))
    return out


def _max_size(run: Run, n: int) -> int:
    k = run.args.max_size
    return min(DEFAULT_MAX_SIZE, n - 1) if k is None else k


def _check_przulj(args, size: int) -> None:
    if getattr(args, "przulj", False) and size > PRZULJ_MAX:
        raise UsageError(f"--przulj needs max size <= {PRZULJ_MAX}, got {size}")


# --- subcommands -------------------------------------------------------------------


def cmd_gdd(run: Run) -> int:
    graphs = _graphs(run)
    results = []
    for i, g in enumerate(graphs):
        size = _max_size(run, g.n)
        _check_przulj(run.args, size)
        D = compute_gdd(g, size, run.catalog(size), jobs=run.args.jobs)
        if run.args.format == "json":
            results.append({"graph6": write_graph6(g), **D.to_dict(g)})
        else:
            if len(graphs) > 1:
                run.emit(f"# graph {i} {write_graph6(g)}\n")
            run.emit(D.to_csv(przulj=run.args.przulj))
    _write(run.args, run.finish_json({"results": results}) if run.args.format == "json" else run.finish_text())
    return 0


def cmd_motifs(run: Run) -> int:
    graphs = _graphs(run)
    results = []
    for i, g in enumerate(graphs):
        size = _max_size(run, g.n)
        _check_przulj(run.args, size)
        cat = run.catalog(size)
        vec = motifs_from_gdd(compute_gdd(g, size, cat))
        if run.args.przulj:
            counts = list(vec.przulj_order(cat))
            header, keys = "przulj_graph,count", list(range(len(counts)))
        else:
            counts = list(vec.counts)
            header, keys = "gamma,code,count", [f"{gm},{cat.graph_classes[gm].code.hex()}" for gm in range(len(counts))]
        results.append({"graph6": write_graph6(g), "max_size": size, "counts": counts, "przulj": run.args.przulj})
        if len(graphs) > 1:
            run.emit(f"# graph {i} {write_graph6(g)}\n")
        run.emit(header + "\n" + "".join(f"{k},{c}\n" for k, c in zip(keys, counts)))
    _write(run.args, run.finish_json({"results": results}) if run.args.format == "json" else run.finish_text())
    return 0


def cmd_connectivity(run: Run) -> int:
    k = run.args.k
    if k is not None and k < 2:
        raise UsageError("--k must be at least 2")
    srcs = _sources(run, lambda n: n - 1 if k is None else n - k + 1)
    results = []
    for i, (g, n, D) in enumerate(srcs):
        if k is not None and k > n - 1:
            raise UsageError(f"--k {k} needs n >= {k + 1}, got n={n}")
        size = n - 1 if k is None else n - k + 1
        block = D.block(size)
        report = articulation_analysis(block, n) if k is None else cut_core_report(block, n, k)
        results.append({"graph6": write_graph6(g) if g else None, **report.to_dict()})
        run.emit(_label(srcs, i, g) + report.describe() + "\n")
    _write(run.args, run.finish_json({"results": results}) if run.args.format == "json" else run.finish_text())
    return 0


def cmd_deck(run: Run) -> int:
    srcs = _sources(run, lambda n: n - 1)
    results = []
    for i, (g, n, D) in enumerate(srcs):
        deck = deck_from_gdd(D.block(n - 1), n)
        cards = sorted(deck.items())
        results.append({"graph6": write_graph6(g) if g else None,
                        "deck": [{"code": c.hex(), "graph6": write_graph6(c.graph()), "count": m} for c, m in cards]})
        if len(srcs) > 1:
            run.emit(f"# graph {i} {write_graph6(g) if g else ''}\n")
        run.emit("".join(f"{m}\t{write_graph6(c.graph())}\n" for c, m in cards))
    _write(run.args, run.finish_json({"results": results}) if run.args.format == "json" else run.finish_text())
    return 0


def cmd_project(run: Run) -> int:
    k = run.args.k
    if k < 2:
        raise UsageError("--k must be at least 2")
    srcs = _sources(run, lambda n: n - k + 1)
    results = []
    for i, (g, n, D) in enumerate(srcs):
        if n - k < 2:
            raise UsageError(f"projection with k={k} needs n >= {k + 2}, got n={n}")
        P = project_gdd(D.block(n - k + 1), n, k)
        results.append(P.to_dict(g))
        if len(srcs) > 1:
            run.emit(f"# graph {i} {write_graph6(g) if g else ''}\n")
        run.emit(P.to_csv())
    _write(run.args, run.finish_json({"results": results}) if run.args.format == "json" else run.finish_text())
    return 0


def cmd_reconstruct_tree(run: Run) -> int:
    srcs = _sources(run, lambda n: n - 1)
    status = 0
    for i, (g, n, D) in enumerate(srcs):
        try:
            t = reconstruct_tree(D, n)
            line = write_graph6(t)
            if g is not None and not isomorphic(t, g):
                line, status = "FAIL not isomorphic to the input", 1
        except ReconstructionError as exc:
            line, status = f"FAIL {exc}", 1
        run.emit(_label(srcs, i, g) + line + "\n")
    _write(run.args, run.finish_text())
    return status


def cmd_reconstruct_asym(run: Run) -> int:
    srcs = _sources(run, lambda n: n - 1)
    results, status = [], 0
    for g, n, D in srcs:
        rep = reconstruct_asymmetric(D, n)
        out = {"input_graph6": write_graph6(g) if g else None, **rep.to_dict()}
        if g is not None and rep.ok:
            out["isomorphic_to_input"] = isomorphic(rep.graph, g)
        if not rep.ok or out.get("isomorphic_to_input") is False:
            status = 1
        results.append(out)
    _write(run.args, run.finish_json({"results": results}))
    return status


def _read_gds3(run: Run) -> Gds3Matrix:
    try:
        return Gds3Matrix.from_csv(_input_text(run))
    except ValueError as exc:
        raise UsageError(f"bad gds3 matrix: {exc}") from None


def cmd_check_gds3(run: Run) -> int:
    status = 0
    if run.args.matrix:
        verdict = filter_candidate(_read_gds3(run))
        run.emit("pass\n" if verdict else f"fail\t{verdict.reason}\n")
        status = 0 if verdict else 1
    else:
        for g in _graphs(run):
            rep = verify_local_identities(g)
            run.emit(f"{write_graph6(g)}\t" + ("ok" if rep.ok else f"FAIL {rep.detail}") + "\n")
            status |= not rep.ok
    _write(run.args, run.finish_text())
    return int(status)


def cmd_decide_gds3(run: Run) -> int:
    dec = decide_realizability(_read_gds3(run))
    run.emit(dec.status + ("\t" + write_graph6(dec.witness) if dec.witness else "") +
             (f"\t{dec.reason}" if dec.reason else "") + "\n")
    _write(run.args, run.finish_text())
    return 0 if dec.status == "realizable" else 1


def cmd_same_gds_pair(run: Run) -> int:
    n = run.args.n
    if n < 4:
        raise UsageError("--n must be at least 4")
    pair = same_gds_pair(n)
    census = rooted_census(pair.g1, pair.v1, n - 1)
    shared = [{"code": code.hex(), "orbit": orbit, "count": c} for (code, orbit), c in sorted(census.items())]
    payload = {"g1": write_graph6(pair.g1), "g2": write_graph6(pair.g2), "v1": pair.v1, "v2": pair.v2,
               "verified": True, "shared_gds": shared}
    _write(run.args, run.finish_json(payload))
    return 0


def cmd_collision_search(run: Run) -> int:
    a = run.args
    try:
        records = collision_search(a.n, a.mode, a.k, connected_only=not a.include_disconnected, jobs=a.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    run.catalog_size = a.k if a.k else a.n - 1
    for r in records:
        run.emit(r.to_json() + "\n")
    _write(a, run.finish_jsonl())
    flagged = sum(r.is_triangle_fork_instance for r in records)
    table = (f"n\tmode\tk\tcollisions\ttriangle_fork\tother\n"
             f"{a.n}\t{a.mode}\t{a.k if a.k else a.n - 1}\t{len(records)}\t{flagged}\t{len(records) - flagged}\n")
    (sys.stdout if a.out and a.out != "-" else sys.stderr).write(table)
    return 0


def cmd_scan_asym(run: Run) -> int:
    a = run.args
    if a.n is not None:
        if a.n > 8:
            raise UsageError("--n scans support n <= 8")
        graphs = [g for g in connected_graphs(a.n) if vertex_connectivity(g) >= 2]
    else:
        graphs = _graphs(run)
    tally: Counter = Counter()
    for g in graphs:
        cat = run.catalog(g.n - 1)
        scan = hypothesis_scan(g, cat)
        rep = reconstruct_asymmetric(compute_gdd(g, g.n - 1, cat), g.n)
        iso = rep.ok and isomorphic(rep.graph, g)
        agree = certificate_agrees(rep, scan)
        ok = agree and (iso if scan.satisfied else not rep.ok)
        tally["satisfied" if scan.satisfied else "not_satisfied"] += 1
        tally["round_trip"] += iso
        tally["mismatch"] += not ok
        run.emit(json.dumps({"graph6": write_graph6(g), "hypotheses": scan.to_dict(), "reconstructed": rep.ok,
                             "isomorphic": iso, "certificate_agrees": agree}, sort_keys=True) + "\n")
    _write(a, run.finish_jsonl())
    summary = "\t".join(f"{k}={tally[k]}" for k in ("satisfied", "not_satisfied", "round_trip", "mismatch"))
    sys.stderr.write(summary + "\n")
    return 1 if tally["mismatch"] else 0


def cmd_catalog_export(run: Run) -> int:
    size = run.args.max_size if run.args.max_size is not None else DEFAULT_MAX_SIZE
    cat = run.catalog(size)
    payload = json.loads(cat.to_json())
    _write(run.args, json.dumps({"manifest": run.manifest(), **payload}, sort_keys=True) + "\n")
    return 0


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--in", dest="inp", metavar="PATH", help="input file, '-' for stdin")
    common.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    common.add_argument("--cache-dir", help="catalog cache directory (default $GRAPHLETS_CACHE_DIR)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--timing", action="store_true", help="report wall time on stderr")

    sizes = _Parser(add_help=False)
    sizes.add_argument("--max-size", type=int, help=f"largest graphlet size (default min({DEFAULT_MAX_SIZE}, n-1))")
    sizes.add_argument("--przulj", action="store_true", help=f"Przulj numbering (max size <= {PRZULJ_MAX})")

    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=["csv", "json"], default="csv")

    p = _Parser(prog=PROG, description="Graphlet degree distributions of small graphs.")
    p.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, parents, help_):
        sp = sub.add_parser(name, parents=parents, help=help_)
        sp.set_defaults(func=func)
        return sp

    add("gdd", cmd_gdd, [common, sizes, fmt], "per-vertex graphlet counts")
    add("motifs", cmd_motifs, [common, sizes, fmt], "whole-graph induced counts derived from the gdd")
    sp = add("connectivity", cmd_connectivity, [common, fmt], "connectivity verdict read from the gdd")
    sp.add_argument("--k", type=int, help="test k-connectivity / cut core instead of articulations")
    add("deck", cmd_deck, [common, fmt], "vertex-deleted subgraphs of a 2-connected graph")
    sp = add("project", cmd_project, [common, fmt], "smaller gdd from the size-(n-k+1) block")
    sp.add_argument("--k", type=int, default=2)
    add("reconstruct-tree", cmd_reconstruct_tree, [common], "rebuild a tree from its gdd")
    add("reconstruct-asym", cmd_reconstruct_asym, [common], "rebuild a 2-connected graph with a rigid card")
    sp = add("check-gds3", cmd_check_gds3, [common], "local identities of graphs, or filter a matrix")
    sp.add_argument("--matrix", action="store_true", help="input is an n x 3 count matrix (CSV)")
    add("decide-gds3", cmd_decide_gds3, [common], "is an n x 3 count matrix realizable")
    sp = add("same-gds-pair", cmd_same_gds_pair, [common], "triangle/fork pair with equal endpoint gds")
    sp.add_argument("--n", type=int, required=True)
    sp = add("collision-search", cmd_collision_search, [common], "exhaustive gds collision search")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mode", choices=["vertex_gds", "whole_gdd"], default="vertex_gds")
    sp.add_argument("--k", type=int, help="size bound (default n-1)")
    sp.add_argument("--include-disconnected", action="store_true")
    sp = add("scan-asym-hypotheses", cmd_scan_asym, [common], "graph-side hypothesis scan vs reconstruction")
    sp.add_argument("--n", type=int, help="scan every 2-connected graph on n vertices")

    cat = sub.add_parser("catalog", help="graphlet catalog utilities")
    cat_sub = cat.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ex = cat_sub.add_parser("export", parents=[common], help="write the catalog JSON")
    ex.add_argument("--max-size", type=int)
    ex.set_defaults(func=cmd_catalog_export)
    return p


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(f"{PROG}: error[{kind}]: {' '.join(str(message).split())}\n")
    return code


def main(argv: list[str] | None = None) -> int:
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        run = Run(args)
        code = args.func(run)
    except UsageError as exc:
        return _fail("usage", exc, 2)
    except (FormatError, GraphError, CatalogError) as exc:
        return _fail("input", exc, 2)
    except (ConnectivityHypothesisError, IntegrityError, ReconstructionError) as exc:
        return _fail("domain", exc, 1)
    except (ValueError, KeyError) as exc:
        return _fail("input", exc, 2)
    if args.timing:
        sys.stderr.write(f"wall_time_s={time.perf_counter() - start:.3f}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

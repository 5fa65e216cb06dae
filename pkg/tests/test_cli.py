import json

import pytest

from graphlets.canon import canonical_code
from graphlets.cli import main
from graphlets.formats import write_graph6
from graphlets.graph import cycle_graph, path_graph, star_graph


@pytest.fixture
def files(tmp_path, cache_dir, monkeypatch):
    monkeypatch.setenv("GRAPHLETS_CACHE_DIR", cache_dir)
    paths = {}
    for name, g in [("c5", cycle_graph(5)), ("p3", path_graph(3)), ("star", star_graph(5))]:
        paths[name] = tmp_path / f"{name}.g6"
        paths[name].write_text(write_graph6(g) + "\n")
    paths["dir"] = tmp_path
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def body(out):
    lines = out.splitlines()
    assert lines[0].startswith("# manifest: ")
    return lines[1:]


def test_gdd_csv(files, capsys):
    code, out, _ = run(capsys, "gdd", "--max-size", 4, "--in", files["c5"])
    rows = body(out)
    assert code == 0 and len(rows) == 6
    assert rows[0].split(",") == ["vertex"] + [str(i) for i in range(15)]
    assert rows[1] == "0,2,2,1,0,0,0,2,2,0,0,0,0,0,0,0"


def test_gdd_przulj_header_and_limit(files, capsys):
    code, out, _ = run(capsys, "gdd", "--max-size", 4, "--przulj", "--in", files["c5"])
    header = body(out)[0].split(",")[1:]
    assert code == 0 and sorted(map(int, header)) == list(range(15))
    code, _, err = run(capsys, "gdd", "--max-size", 6, "--przulj", "--in", files["c5"])
    assert code == 2 and err.startswith("graphlets: error[usage]:")


def test_connectivity_p3(files, capsys):
    code, out, _ = run(capsys, "connectivity", "--in", files["p3"])
    assert code == 0 and body(out) == ["unique articulation: vertex 1"]


def test_matrix_json_feeds_other_commands(files, capsys):
    out_path = files["dir"] / "c5.json"
    assert run(capsys, "gdd", "--max-size", 4, "--format", "json", "--in", files["c5"], "--out", out_path)[0] == 0
    data = json.loads(out_path.read_text())
    assert data["manifest"]["command"] == "gdd" and data["results"][0]["n"] == 5
    code, out, _ = run(capsys, "deck", "--in", out_path)
    assert code == 0 and body(out) == [f"5\t{write_graph6(canonical_code(path_graph(4)).graph())}"]
    code, out, _ = run(capsys, "project", "--in", out_path, "--k", 2)
    assert body(out)[1] == "0,2,2,1,0"


def test_reconstruct_commands(files, capsys):
    code, out, _ = run(capsys, "reconstruct-tree", "--in", files["star"])
    assert code == 0 and body(out) == [write_graph6(star_graph(5))]
    code, out, _ = run(capsys, "reconstruct-asym", "--in", files["c5"])
    assert code == 1 and json.loads(out)["results"][0]["stage"] == "hypotheses"
    f7 = files["dir"] / "h.g6"
    f7.write_text("F@Q^O\n")
    code, out, _ = run(capsys, "reconstruct-asym", "--in", f7)
    res = json.loads(out)["results"][0]
    assert code == 0 and res["ok"] and res["isomorphic_to_input"]


def test_gds3_commands(files, capsys):
    m = files["dir"] / "m.csv"
    m.write_text("edge,p3_end,triangle\n2,0,1\n2,0,1\n2,0,1\n")
    code, out, _ = run(capsys, "decide-gds3", "--in", m)
    assert code == 0 and body(out)[0].startswith("realizable\t")
    m.write_text("3,0,1\n1,0,1\n1,0,1\n1,0,1\n1,0,1\n")
    assert run(capsys, "decide-gds3", "--in", m)[0] == 1
    code, out, _ = run(capsys, "check-gds3", "--matrix", "--in", m)
    assert code == 1 and body(out)[0].startswith("fail\t")
    code, out, _ = run(capsys, "check-gds3", "--in", files["c5"])
    assert code == 0 and body(out)[0].endswith("\tok")


def test_same_gds_pair_and_collisions(files, capsys):
    code, out, _ = run(capsys, "same-gds-pair", "--n", 5)
    data = json.loads(out)
    assert code == 0 and data["verified"] and data["v1"] == 0
    code, out, err = run(capsys, "collision-search", "--n", 6)
    lines = out.splitlines()
    assert code == 0 and "manifest" in json.loads(lines[0])
    recs = [json.loads(x) for x in lines[1:]]
    assert recs and all(r["is_triangle_fork_instance"] for r in recs)
    assert "triangle_fork" in err
    assert run(capsys, "collision-search", "--n", 9)[0] == 2


def test_outputs_are_byte_identical(files, capsys):
    a = run(capsys, "collision-search", "--n", 5, "--jobs", 2)[1]
    b = run(capsys, "collision-search", "--n", 5)[1]
    assert a == b
    c = run(capsys, "gdd", "--in", files["c5"], "--jobs", 3)[1]
    d = run(capsys, "gdd", "--in", files["c5"])[1]
    assert c == d


def test_scan_and_catalog(files, capsys):
    code, out, err = run(capsys, "scan-asym-hypotheses", "--n", 5)
    assert code == 0 and "mismatch=0" in err
    code, out, _ = run(capsys, "catalog", "export", "--max-size", 3)
    data = json.loads(out)
    assert code == 0 and len(data["classes"]) == 3 and data["manifest"]["catalog_max_size"] == 3


def test_motifs(files, capsys):
    code, out, _ = run(capsys, "motifs", "--in", files["c5"], "--przulj")
    assert code == 0 and body(out)[1:5] == ["0,5", "1,5", "2,0", "3,5"]


@pytest.mark.parametrize("argv, kind", [
    (["bogus"], "usage"),
    (["gdd"], "usage"),
    (["gdd", "--in", "/nonexistent"], "usage"),
])
def test_usage_errors(capsys, argv, kind):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith(f"graphlets: error[{kind}]:") and err.count("\n") == 1


def test_domain_and_input_errors(files, capsys):
    bad = files["dir"] / "bad.g6"
    bad.write_text("A\x01\n")
    code, _, err = run(capsys, "gdd", "--in", bad)
    assert code == 2 and "error[input]" in err
    disc = files["dir"] / "disc.g6"
    disc.write_text("A?\n")
    code, _, err = run(capsys, "connectivity", "--in", disc)
    assert code in (1, 2) and err.startswith("graphlets: error[")

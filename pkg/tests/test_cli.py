import io
import os

import pytest

from specter.cli import main, shard_of
from specter.formats import read_adjacency_dumps
from specter.graphcore import Graph, induced_subgraph, petersen, write_graph6
from itertools import combinations


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def test_params():
    code, out = run(["params", "75", "32", "10", "16"])
    assert code == 0
    assert "r=2 f=56 s=-8 g=18" in out and "r:19" in out


def test_params_errors():
    assert run(["params", "10", "3", "0", "2"])[0] == 1
    assert run(["params", "10", "0", "0", "1"])[0] == 2
    assert run(["params", "10"])[0] == 2
    assert run(["nonsense"])[0] == 2


def test_bvec():
    code, out = run(["bvec", "75", "32", "10", "16", "--degrees", "0,0,0,4", "--cap", "4=0"])
    assert code == 0
    assert out.split() == ["0,29,39,3,0", "1,26,42,2,0", "2,23,45,1,0", "3,20,48,0,0"]
    assert run(["bvec", "75", "32", "10", "16", "--degrees", "0,1"])[0] == 2
    assert run(["bvec", "75", "32", "10", "16", "--degrees", "x"])[0] == 2


def test_interlace_filter():
    inp = "Bw\nBg\n" + write_graph6(Graph.complete(3)) + "\n"
    code, out = run(["interlace", "10", "3", "0", "1"], inp)
    assert code == 0 and out.split() == ["Bg"]
    assert run(["interlace", "10", "3", "0", "1"], "B\n")[0] == 2


def test_composed_pipeline_matches_monolithic():
    seeds = "C@\nCB\n"
    code, level = run(["extend", "10", "3", "0", "1", "--r", "1"], seeds)
    assert code == 0 and level
    code, dumps = run(["compgraph", "--r", "1", "--min-order", "5"], level)
    assert code == 0 and list(read_adjacency_dumps(dumps.splitlines()))
    code_c, verdicts = run(["clique", "--cutoff", "5"], dumps)
    code_p, mono = run(["pipeline", "10", "3", "0", "1", "--r", "1"], seeds)
    assert verdicts.splitlines()[-1] == mono.splitlines()[-1] == "verdict witness-found"
    assert code_c == code_p == 1


def test_clique_exact():
    dump = "n=3\n6\na\nc\n"  # triangle
    code, out = run(["clique"], dump)
    assert code == 0 and "exact(3)" in out
    assert run(["clique"], "n=2\n4\n0\n")[0] == 2


def test_jobs_determinism():
    seeds = "\n".join(sorted({write_graph6(induced_subgraph(petersen(), S)) for S in combinations(range(10), 4)})) + "\n"
    outs = {run(["pipeline", "10", "3", "0", "1", "--r", "1", "--jobs", str(j)], seeds)[1] for j in (1, 4)}
    assert len(outs) == 1


def test_shards_partition():
    lines = [write_graph6(induced_subgraph(petersen(), S)) for S in combinations(range(10), 5)]
    text = "\n".join(lines) + "\n"
    _, full = run(["interlace", "10", "3", "0", "1"], text)
    parts = [run(["interlace", "10", "3", "0", "1", "--shard", f"{i}/3"], text)[1] for i in range(3)]
    assert sorted("".join(parts).split()) == sorted(full.split())
    assert run(["interlace", "10", "3", "0", "1", "--shard", "3/3"], text)[0] == 2
    assert shard_of(Graph.cycle(5), 4) == shard_of(Graph.cycle(5).relabel([1, 2, 3, 4, 0]), 4)


def test_scenario_commands(tmp_path):
    code, out = run(["scenario", "k5-config"])
    assert code == 0 and "PASS" in out
    assert run(["scenario", "case-126422"])[0] == 2
    assert run(["scenario", "no-such-scenario"])[0] == 2
    code, out = run(["scenario", "--list"])
    assert "petersen-positive" in out
    target = tmp_path / "report.txt"
    assert run(["scenario", "x1x2-adjacent", "--out", str(target)])[0] == 0
    assert "generated 6" in target.read_text()


def test_env_jobs(monkeypatch):
    monkeypatch.setenv("SPECTER_JOBS", "2")
    code, out = run(["scenario", "k4-bvectors"])
    assert code == 0

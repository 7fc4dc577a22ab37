import json
import os

import pytest

from specter.feasibility import SrgParams
from specter.graphcore import Graph
from specter.interlacing import interlaces
from specter.scenarios import (
    BUILTINS,
    X1X2_FAMILY,
    canonical_state,
    grow_level,
    load_scenario_file,
    run_scenario,
    triangle_configurations,
    uncolored_classes,
)

X = SrgParams(75, 32, 10, 16)
HEAVY = os.environ.get("SPECTER_HEAVY") == "1"


@pytest.mark.parametrize("name", ["x1x2-adjacent", "x3-independent", "k4-bvectors", "k5-config", "petersen-positive"])
def test_light_builtins_pass(name):
    report = run_scenario(BUILTINS[name])
    assert report.passed, report.text()


def test_x1x2_counts():
    report = run_scenario(BUILTINS["x1x2-adjacent"])
    assert "generated 6" in report.lines and "interlacing 0" in report.lines


def test_x1x2_family_by_hand():
    # independent construction: K4, x1 and x2 on 3 clique vertices each, x1 ~ x2, x0 free
    from itertools import combinations, product

    graphs = []
    for t1, t2 in product(combinations(range(4), 3), repeat=2):
        for e01, e02 in product((0, 1), repeat=2):
            edges = list(combinations(range(4), 2)) + [(5, c) for c in t1] + [(6, c) for c in t2] + [(5, 6)]
            edges += [(4, 5)] * e01 + [(4, 6)] * e02
            graphs.append(Graph.from_edges(7, sorted(set(edges))))
    classes = uncolored_classes(graphs)
    assert len(classes) == 6
    assert not any(interlaces(G, X) for G in classes)


def test_triangle_configurations_distinct():
    confs = triangle_configurations()
    assert len(confs) == 2 and all(len(c) == 8 for c in confs)


def test_grow_level_dedups_with_colors():
    # adding a pendant vertex to either end of a coloured path
    P = Graph.path(3)

    def propose(G, colors):
        for v in range(G.n):
            yield 1 << v, 9

    plain, _ = grow_level([(P, (0, 0, 0))], propose, X)
    coloured, _ = grow_level([(P, (1, 0, 0))], propose, X)
    assert len(plain) == 2 and len(coloured) == 3


def test_canonical_state_consistent():
    G = Graph.path(4)
    f1, s1 = canonical_state(G, (0, 1, 1, 0))
    f2, s2 = canonical_state(G.relabel([3, 2, 1, 0]), (0, 1, 1, 0))
    assert f1 == f2 and s1 == s2


def test_scenario_file(tmp_path):
    data = {"name": "x1x2-file", "params": [75, 32, 10, 16], **X1X2_FAMILY, "expect": {"kind": "none-interlace", "generated": 6}}
    path = tmp_path / "s.json"
    path.write_text(json.dumps(data))
    spec = load_scenario_file(str(path))
    assert run_scenario(spec).passed
    data["expect"]["generated"] = 7
    path.write_text(json.dumps(data))
    assert not run_scenario(load_scenario_file(str(path))).passed


@pytest.mark.heavy
@pytest.mark.skipif(not HEAVY, reason="set SPECTER_HEAVY=1")
@pytest.mark.parametrize("name", ["case-223451", "triangles-8"])
def test_heavy_builtins(name):
    report = run_scenario(BUILTINS[name], jobs=os.cpu_count() or 1)
    assert report.passed, report.text()

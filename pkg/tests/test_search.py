import warnings
from collections import Counter
from itertools import combinations

import networkx as nx
import pytest

from conftest import to_nx
from specter.feasibility import SrgParams
from specter.graphcore import Graph, add_vertex, induced_subgraph, paley, petersen, write_graph6
from specter.interlacing import interlaces
from specter.isomorph import canonical_form
from specter.search import (
    INCONCLUSIVE,
    REFUTED,
    WITNESS_FOUND,
    SearchContext,
    deficient_pairs,
    extend_level,
    extend_one_vertex,
    extend_to_order,
    graceful_pairs,
    pipeline_check,
    read_level,
    read_manifest,
    scc_select,
)
from specter.spectra import has_eigenvalue

PET = SrgParams(10, 3, 0, 1)
X = SrgParams(75, 32, 10, 16)


def brute_extensions(H, p):
    out = []
    for size in range(H.n + 1):
        for S in combinations(range(H.n), size):
            G = add_vertex(H, S)
            if interlaces(G, p) and not any(nx.is_isomorphic(to_nx(G), to_nx(K)) for K in out):
                out.append(G)
    return out


@pytest.mark.parametrize("H", [Graph.complete(4), Graph.path(4), Graph.empty(3), Graph.cycle(5)])
def test_extend_one_vertex_matches_brute_force(H):
    ctx = SearchContext.for_params(X)
    got = extend_one_vertex(H, ctx)
    want = brute_extensions(H, X)
    assert len(got) == len(want)
    assert {canonical_form(G) for G in got} == {canonical_form(G) for G in want}


def test_context():
    ctx = SearchContext.for_params(X)
    assert (ctx.r, ctx.target_order, ctx.clique_target) == (2, 19, 56)
    assert SearchContext.for_params(X, -8).target_order == 57
    with pytest.raises(ValueError):
        SearchContext.for_params(X, 3)
    with pytest.raises(ValueError):
        SearchContext.for_params(SrgParams(13, 6, 2, 3))


def test_petersen_star_complements_recovered():
    P = petersen()
    ctx = SearchContext.for_params(PET, 1)
    complements = {canonical_form(induced_subgraph(P, S)) for S in combinations(range(10), 5)
                   if not has_eigenvalue(induced_subgraph(P, S), 1)}
    for S in combinations(range(10), 5):
        H = induced_subgraph(P, S)
        if has_eigenvalue(H, 1):
            continue
        for drop in range(5):
            sub = induced_subgraph(H, [v for v in range(5) if v != drop])
            if has_eigenvalue(sub, 1):
                continue
            # without the shortcut every star complement containing sub comes back
            found_plain = {canonical_form(G) for G in extend_to_order(sub, ctx, use_graceful=False)}
            assert canonical_form(H) in found_plain
            # with it, at least one genuine star complement survives
            found = {canonical_form(G) for G in extend_to_order(sub, ctx)}
            assert found & complements
            assert found <= found_plain


def test_graceful_restriction_is_safe():
    # every seed inside Petersen (or Paley(9)) must keep its witness with or without the shortcut
    for G, p, r in [(petersen(), PET, 1), (paley(9), SrgParams(9, 4, 1, 2), 1)]:
        ctx = SearchContext.for_params(p, r)
        seen = set()
        for size in (2, 3, ctx.target_order - 1):
            for S in combinations(range(G.n), size):
                H = induced_subgraph(G, S)
                f = canonical_form(H)
                if f in seen:
                    continue
                seen.add(f)
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", RuntimeWarning)
                    a = pipeline_check(H, ctx, use_graceful=True)
                    b = pipeline_check(H, ctx, use_graceful=False)
                assert a.status == b.status == WITNESS_FOUND, write_graph6(H)


def test_graceful_pairs_are_deficient():
    ctx = SearchContext.for_params(PET, 1)
    H = Graph.empty(4)
    pairs = graceful_pairs(H, ctx)
    assert pairs and set(pairs) <= set(deficient_pairs(H, PET))
    assert deficient_pairs(Graph.complete(2), SrgParams(10, 3, 0, 1)) == []


def test_refutes_non_interlacing_seed():
    ctx = SearchContext.for_params(PET, 1)
    v = pipeline_check(Graph.complete(3), ctx)
    assert v.status == REFUTED and v.pruned == 1


def test_scc_select():
    ctx = SearchContext.for_params(SrgParams(10, 3, 0, 1), 1)
    S = scc_select(Graph.cycle(4), SearchContext(PET, 2, 5, 5))
    assert S == [0, 1, 2]
    P = petersen()
    S = scc_select(P, ctx)
    assert len(S) == 5 and not has_eigenvalue(induced_subgraph(P, S), 1)


def test_extend_errors():
    ctx = SearchContext.for_params(PET, 1)
    with pytest.raises(ValueError):
        list(extend_to_order(Graph.empty(6), ctx))
    with pytest.raises(ValueError):
        list(extend_to_order(Graph.complete(2), ctx))  # K2 has eigenvalue 1


def test_checkpoint_and_resume(tmp_path):
    ctx = SearchContext.for_params(PET, 1)
    seed = Graph.empty(2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        first = list(extend_to_order(seed, ctx, checkpoint_dir=tmp_path))
    manifest = read_manifest(tmp_path / "manifest.txt")
    assert manifest["level"] == "5"
    assert len(read_level(tmp_path / "level_4.g6")) >= 1
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        second = list(extend_to_order(seed, ctx, checkpoint_dir=tmp_path))
    assert [write_graph6(G) for G in first] == [write_graph6(G) for G in second]


def test_pipeline_time_budget(tmp_path):
    ctx = SearchContext.for_params(PET, 1)
    v = pipeline_check(Graph.empty(4), ctx, checkpoint_dir=tmp_path, time_budget=0.0)
    assert v.status in (INCONCLUSIVE, WITNESS_FOUND)
    if v.status == INCONCLUSIVE:
        assert v.checkpoint == str(tmp_path)
        again = pipeline_check(Graph.empty(4), ctx, checkpoint_dir=tmp_path)
        assert again.status == WITNESS_FOUND


def test_level_is_deterministic_across_jobs():
    ctx = SearchContext.for_params(X)
    graphs = extend_one_vertex(Graph.complete(3), ctx)
    a = extend_level(graphs, ctx, jobs=1)
    b = extend_level(graphs, ctx, jobs=4)
    assert [write_graph6(G) for G in a] == [write_graph6(G) for G in b]

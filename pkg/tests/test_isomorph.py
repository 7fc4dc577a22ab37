import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import from_nx, random_graph, to_nx
from specter.graphcore import Graph, paley, petersen
from specter.isomorph import (
    automorphism_group_order,
    automorphism_orbits,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    dedup_canonical,
    extended_orbits,
    is_isomorphic,
    neighborhood_subgraph,
)

ATLAS = [from_nx(g) for g in nx.graph_atlas_g()[1:]]


def nx_automorphisms(G):
    return list(GraphMatcher(to_nx(G), to_nx(G)).isomorphisms_iter())


def test_atlas_forms_are_distinct():
    forms = {canonical_form(G) for G in ATLAS}
    assert len(forms) == len(ATLAS)


@given(st.integers(0, len(ATLAS) - 1), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_form_is_invariant_under_relabelling(idx, r):
    G = ATLAS[idx]
    perm = list(range(G.n))
    r.shuffle(perm)
    assert canonical_form(G.relabel(perm)) == canonical_form(G)
    assert canonical_graph(G.relabel(perm)) == canonical_graph(G)


def test_labeling_gives_canonical_graph(rng):
    for _ in range(50):
        G = random_graph(rng, rng.randint(1, 14), 0.5)
        form, order = canonical_labeling(G)
        perm = [0] * G.n
        for i, v in enumerate(order):
            perm[v] = i
        assert G.relabel(perm) == canonical_graph(G)
        assert nx.is_isomorphic(to_nx(canonical_graph(G)), to_nx(G))


def test_agrees_with_networkx(rng):
    for _ in range(400):
        n = rng.randint(1, 10)
        p = rng.choice([0.3, 0.5, 0.7])
        G, H = random_graph(rng, n, p), random_graph(rng, n, p)
        assert is_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


def test_colors_distinguish():
    P = Graph.path(3)
    assert canonical_form(P, [0, 0, 1]) == canonical_form(P, [1, 0, 0])
    assert canonical_form(P, [0, 1, 0]) != canonical_form(P, [1, 0, 0])
    assert canonical_form(Graph.empty(2), [0, 1]) != canonical_form(Graph.empty(2), [1, 2])


@pytest.mark.parametrize("G,order", [(petersen(), 120), (paley(13), 78), (paley(9), 72), (Graph.complete(6), 720), (Graph.cycle(7), 14)])
def test_group_orders(G, order):
    assert automorphism_group_order(G) == order


def test_group_order_and_orbits_match_brute_force(rng):
    for G in ATLAS[::7]:
        autos = nx_automorphisms(G)
        assert automorphism_group_order(G) == len(autos)
        orbit = {v: frozenset(a[v] for a in autos) for v in range(G.n)}
        assert sorted(map(sorted, set(orbit.values()))) == sorted(automorphism_orbits(G))


def neighborhood_partition(G):
    classes = []
    for v in range(G.n):
        Nv = to_nx(neighborhood_subgraph(G, v))
        for c in classes:
            if nx.is_isomorphic(Nv, to_nx(neighborhood_subgraph(G, c[0]))):
                c.append(v)
                break
        else:
            classes.append([v])
    return sorted(classes)


def test_extended_orbits_small():
    for G in ATLAS[::5]:
        assert sorted(extended_orbits(G)) == neighborhood_partition(G)


def test_extended_orbits_coarsen_orbits():
    G = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    # P3 plus an edge: the path's end vertices and the edge's vertices all see K1
    assert sorted(automorphism_orbits(G)) == [[0, 2], [1], [3, 4]]
    assert sorted(extended_orbits(G)) == [[0, 2, 3, 4], [1]]


def test_dedup(rng):
    graphs = []
    for _ in range(30):
        G = random_graph(rng, 6, 0.5)
        perm = list(range(6))
        rng.shuffle(perm)
        graphs += [G, G.relabel(perm)]
    reps = list(dedup_canonical(graphs))
    expected = []
    for G in graphs:
        if not any(nx.is_isomorphic(to_nx(G), to_nx(H)) for H in expected):
            expected.append(G)
    assert len(reps) == len(expected)
    forms = [canonical_form(G) for G in reps]
    assert forms == sorted(forms)

from fractions import Fraction
from itertools import product

import pytest
import sympy

from conftest import brute_clique_number
from specter.graphcore import Graph, induced_subgraph, paley, petersen
from specter.spectra import SingularMatrixError, resolvent
from specter.starcomp import (
    TooSmall,
    comparability_graph,
    comparability_vertices,
    find_f_clique,
    find_star_complement,
    has_f_clique,
    inner_product,
    label_value,
    outside_labels,
    verify_comparability_graph,
)


def sympy_inner(H: Graph, r: int, u, v):
    M = sympy.Matrix(H.n, H.n, lambda i, j: (r if i == j else 0) - int(H.adjacent(i, j)))
    val = (sympy.Matrix([u]) * M.inv() * sympy.Matrix(v))[0, 0]
    return Fraction(int(val.p), int(val.q))


def brute_vertices(H: Graph, r: int, regular=True):
    out = []
    ones = [1] * H.n
    for u in product((0, 1), repeat=H.n):
        if sympy_inner(H, r, u, u) == r and (not regular or sympy_inner(H, r, u, ones) == -1):
            out.append(u)
    return sorted(out, key=label_value)


def test_inner_product_matches_sympy(rng):
    H = induced_subgraph(petersen(), [5, 6, 7, 8, 9])
    res = resolvent(H, 1)
    for _ in range(20):
        u = [rng.randint(0, 1) for _ in range(5)]
        v = [rng.randint(0, 1) for _ in range(5)]
        assert inner_product(res, u, v) == sympy_inner(H, 1, u, v)
    with pytest.raises(ValueError):
        inner_product(res, [1], [1])


@pytest.mark.parametrize("G,r", [(petersen(), 1), (paley(9), 1)])
def test_vertices_match_brute_force(G, r):
    S = find_star_complement(G, r)
    H = induced_subgraph(G, S)
    res = resolvent(H, r)
    assert comparability_vertices(res) == brute_vertices(H, r)
    assert comparability_vertices(res, regular_host=False) == brute_vertices(H, r, regular=False)


@pytest.mark.parametrize("G,r,f", [(petersen(), 1, 5), (paley(9), 1, 4), (petersen(), -2, 4)])
def test_positive_control(G, r, f):
    S = find_star_complement(G, r)
    assert len(S) == G.n - f
    H = induced_subgraph(G, S)
    C = comparability_graph(H, r)
    assert verify_comparability_graph(C)
    assert has_f_clique(C, f)
    labels = outside_labels(G, S)
    index = {u: i for i, u in enumerate(C.labels)}
    assert all(u in index for u in labels)
    clique = [index[u] for u in labels]
    assert all(C.graph.adjacent(a, b) for a in clique for b in clique if a != b)
    w = find_f_clique(C, f)
    assert w is not None and len(w) == f


def test_clique_number_matches_brute_force():
    G = petersen()
    H = induced_subgraph(G, find_star_complement(G, 1))
    C = comparability_graph(H, 1)
    omega = brute_clique_number(C.graph)
    assert has_f_clique(C, omega) and not has_f_clique(C, omega + 1)


def test_too_small_and_singular():
    H = induced_subgraph(petersen(), [5, 6, 7, 8, 9])
    small = comparability_graph(H, 1, min_order=1000)
    assert isinstance(small, TooSmall) and small.min_order == 1000
    assert not has_f_clique(small, 1)
    with pytest.raises(SingularMatrixError):
        comparability_graph(Graph.complete(2), -1)
    with pytest.raises(ValueError):
        find_star_complement(petersen(), 0)

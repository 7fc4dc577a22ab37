import random
from itertools import combinations

import numpy as np
import pytest

from specter.feasibility import SrgParams
from specter.graphcore import Graph, induced_subgraph, paley, petersen
from specter.interlacing import (
    host_spectrum,
    interlaces,
    interlaces_many,
    partitioned_matrix,
    raw_partitioned_matrix,
    sequence_interlaces,
)

PET = SrgParams(10, 3, 0, 1)
P13 = SrgParams(13, 6, 2, 3)
X = SrgParams(75, 32, 10, 16)


def true_quotient(G: Graph, S):
    """Quotient matrix of G for the partition {s} for s in S, plus the rest."""
    S = list(S)
    rest = [v for v in range(G.n) if v not in S]
    parts = [[s] for s in S] + [rest]
    Q = np.zeros((len(parts), len(parts)))
    for i, A in enumerate(parts):
        for j, B in enumerate(parts):
            Q[i, j] = sum(G.adjacent(a, b) for a in A for b in B) / len(A)
    return Q


def test_partitioned_matrix_matches_true_quotient():
    rng = random.Random(5)
    for G, p in [(petersen(), PET), (paley(13), P13)]:
        for _ in range(30):
            S = sorted(rng.sample(range(G.n), rng.randint(1, G.n - 1)))
            H = induced_subgraph(G, S)
            assert np.allclose(raw_partitioned_matrix(H, p), true_quotient(G, S))
            B = partitioned_matrix(H, p)
            assert np.allclose(B, B.T)
            ev_raw = np.sort(np.linalg.eigvals(raw_partitioned_matrix(H, p)).real)
            assert np.allclose(ev_raw, np.sort(np.linalg.eigvalsh(B)))


def test_sequence_interlaces():
    assert sequence_interlaces([2, 0], [3, 1, -1])
    assert not sequence_interlaces([2.5, 1.5], [3, 1, -1])
    assert not sequence_interlaces([0, -2], [3, 1, -1])
    assert sequence_interlaces([1 + 1e-12], [1, 1])
    assert sequence_interlaces([], [1])
    with pytest.raises(ValueError):
        sequence_interlaces([0, 1], [3, 2, 1])
    with pytest.raises(ValueError):
        sequence_interlaces([1, 0, -1], [1, 0])


def test_host_spectrum():
    lam = host_spectrum(X)
    assert len(lam) == 75 and lam[0] == 32 and np.sum(lam == 2) == 56 and np.sum(lam == -8) == 18


def test_petersen_subgraphs_interlace_exhaustive():
    G = petersen()
    for size in range(1, 7):
        for S in combinations(range(10), size):
            assert interlaces(induced_subgraph(G, S), PET)


def test_paley_random_subgraphs_interlace():
    G = paley(13)
    rng = random.Random(11)
    graphs = [induced_subgraph(G, sorted(rng.sample(range(13), rng.randint(1, 12)))) for _ in range(2000)]
    assert all(interlaces_many(graphs, P13))


def test_known_non_interlacing():
    # a triangle cannot sit inside the triangle-free Petersen graph; K5 has too large a degree
    assert not interlaces(Graph.complete(3), PET)
    assert not interlaces(Graph.complete(5), PET)


def test_batch_matches_single():
    rng = random.Random(2)
    graphs = []
    for _ in range(300):
        n = rng.randint(1, 12)
        graphs.append(Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5]))
    assert interlaces_many(graphs, X) == [interlaces(G, X) for G in graphs]
    assert interlaces_many([], X) == []

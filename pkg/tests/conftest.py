import random
from itertools import combinations

import networkx as nx
import pytest

from specter.graphcore import Graph


def to_nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def from_nx(g: nx.Graph) -> Graph:
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in g.edges()])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def brute_clique_number(G: Graph) -> int:
    best = 0
    for size in range(1, G.n + 1):
        if any(all(G.adjacent(u, v) for u, v in combinations(S, 2)) for S in combinations(range(G.n), size)):
            best = size
        else:
            break
    return best


def is_srg(G: Graph, v, k, lam, mu) -> bool:
    if G.n != v or any(G.degree(x) != k for x in range(v)):
        return False
    for a, b in combinations(range(v), 2):
        common = (G.rows[a] & G.rows[b]).bit_count()
        if common != (lam if G.adjacent(a, b) else mu):
            return False
    return True


@pytest.fixture
def rng():
    return random.Random(20240611)

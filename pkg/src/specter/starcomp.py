"""Star-complement inner products and comparability graphs.

Everything here is exact: the resolvent is held as an integer matrix N and a
denominator D, so <u, v> = u N v^T / D and the defining identities become
integer equalities.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .clique import clique_number_symmetric, greedy_coloring_bound
from .graphcore import Graph, induced_subgraph
from .spectra import RationalResolvent, eigenvalue_multiplicity_exact, resolvent

log = logging.getLogger(__name__)


def inner_product(res: RationalResolvent, u: Sequence[int], v: Sequence[int]) -> Fraction:
    if len(u) != res.order or len(v) != res.order:
        raise ValueError(f"vectors must have length {res.order}")
    total = 0
    for i, ui in enumerate(u):
        if ui:
            row = res.numer[i]
            total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
    return Fraction(total, res.denom)


@dataclass(frozen=True)
class ComparabilityGraph:
    graph: Graph
    labels: tuple[tuple[int, ...], ...]
    source: Graph
    r: int

    @property
    def order(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class TooSmall:
    """Marker for a comparability graph with fewer vertices than requested."""

    order: int
    min_order: int


def label_value(u: Sequence[int]) -> int:
    """Integer whose bit i is u[i]; comparability vertices are sorted by it."""
    return sum(1 << i for i, x in enumerate(u) if x)


def comparability_vertices(res: RationalResolvent, regular_host: bool = True) -> list[tuple[int, ...]]:
    """All 0/1 vectors u with <u,u> = r (and <u,1> = -1 when the host is regular).

    Walks the 2^m vectors in Gray-code order, updating w = N u, <u, u> and
    <u, 1> incrementally with one column per step.
    """
    m = res.order
    N = [list(row) for row in res.numer]
    D = res.denom
    target_q = res.r * D
    colsum = [sum(N[i][j] for i in range(m)) for j in range(m)]
    found: list[int] = []
    w = [0] * m
    q = 0
    lin = 0
    u = 0

    def accept():
        if q == target_q and (not regular_host or lin == -D):
            found.append(u)

    accept()
    for step in range(1, 1 << m):
        j = (step & -step).bit_length() - 1
        col = N[j]  # N is symmetric, so row j is column j
        if (u >> j) & 1:
            u ^= 1 << j
            w = [a - b for a, b in zip(w, col)]
            q -= 2 * w[j] + col[j]
            lin -= colsum[j]
        else:
            q += 2 * w[j] + col[j]
            w = [a + b for a, b in zip(w, col)]
            lin += colsum[j]
            u ^= 1 << j
        accept()
    found.sort()
    return [tuple((x >> i) & 1 for i in range(m)) for x in found]


def _gram(res: RationalResolvent, labels: Sequence[Sequence[int]]) -> np.ndarray:
    """Integer matrix U N U^T (numerators of all pairwise inner products)."""
    U = np.array(labels, dtype=np.int64).reshape(len(labels), res.order)
    bound = max((abs(x) for row in res.numer for x in row), default=0) * res.order * res.order
    if bound < 2 ** 62:
        N = np.array(res.numer, dtype=np.int64).reshape(res.order, res.order)
        return U @ N @ U.T
    N = np.array(res.numer, dtype=object).reshape(res.order, res.order)
    Uo = U.astype(object)
    return Uo.dot(N).dot(Uo.T)


def comparability_graph(
    H: Graph,
    r: int,
    min_order: int = 0,
    regular_host: bool = True,
) -> ComparabilityGraph | TooSmall:
    res = resolvent(H, r)
    labels = comparability_vertices(res, regular_host)
    if len(labels) < min_order:
        return TooSmall(len(labels), min_order)
    k = len(labels)
    rows = [0] * k
    if k:
        P = _gram(res, labels)
        D = res.denom
        adj = (P == 0) | (P == -D)
        np.fill_diagonal(adj, False)
        for i in range(k):
            row = 0
            for j in np.flatnonzero(adj[i]):
                row |= 1 << int(j)
            rows[i] = row
    return ComparabilityGraph(Graph._trusted(k, tuple(rows)), tuple(labels), H, r)


def verify_comparability_graph(C: ComparabilityGraph, regular_host: bool = True) -> bool:
    """Recheck every defining identity with Fraction arithmetic."""
    res = resolvent(C.source, C.r)
    ones = [1] * res.order
    for u in C.labels:
        if inner_product(res, u, u) != C.r:
            return False
        if regular_host and inner_product(res, u, ones) != -1:
            return False
    if len(set(C.labels)) != len(C.labels):
        return False
    for i, u in enumerate(C.labels):
        for j in range(i + 1, len(C.labels)):
            ip = inner_product(res, u, C.labels[j])
            if C.graph.adjacent(i, j) != (ip in (0, -1)):
                return False
    return True


def has_f_clique(C: ComparabilityGraph | TooSmall, f: int) -> bool:
    if isinstance(C, TooSmall) or C.graph.n < f:
        return False
    if f <= 0:
        return True
    if greedy_coloring_bound(C.graph) < f:
        return False
    return clique_number_symmetric(C.graph, f).reached


def find_f_clique(C: ComparabilityGraph, f: int) -> Optional[tuple[int, ...]]:
    if C.graph.n < f:
        return None
    res = clique_number_symmetric(C.graph, f)
    return res.witness if res.reached else None


def find_star_complement(G: Graph, r: int) -> list[int]:
    """Vertex set S with |S| = n - mult(r) and r not an eigenvalue of G[S].

    Deletes one vertex at a time, always one that lowers the multiplicity of
    r by exactly one, backtracking if a branch gets stuck.
    """
    f = eigenvalue_multiplicity_exact(G, r)
    if f == 0:
        raise ValueError(f"{r} is not an eigenvalue of the graph")

    def search(keep: list[int], mult: int) -> Optional[list[int]]:
        if mult == 0:
            return keep
        for v in keep:
            rest = [w for w in keep if w != v]
            m = eigenvalue_multiplicity_exact(induced_subgraph(G, rest), r)
            if m == mult - 1:
                found = search(rest, m)
                if found is not None:
                    return found
        return None

    S = search(list(range(G.n)), f)
    if S is None:
        raise RuntimeError("no star complement found; the eigenvalue data is inconsistent")
    return S


def outside_labels(G: Graph, S: Sequence[int]) -> list[tuple[int, ...]]:
    """Neighbourhoods in G[S] of the vertices outside S, as 0/1 vectors over sorted S."""
    order = sorted(S)
    inside = set(order)
    return [tuple(int(G.adjacent(x, s)) for s in order) for x in range(G.n) if x not in inside]

"""Partitioned adjacency matrices of candidate subgraphs and the interlacing test.

For a candidate H on m vertices inside a hypothetical SRG the vertex set is
split into m singletons plus the rest. Host regularity fixes every block
count, so the quotient matrix depends only on H and the parameters. The raw
quotient matrix is not symmetric; it is diagonally similar to the matrix

    B[i][j] = e(V_i, V_j) / sqrt(|V_i| |V_j|)     (i != j)
    B[i][i] = 2 e(V_i) / |V_i|

which has the same spectrum, so a symmetric eigensolver is used.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from .feasibility import SrgParams, srg_spectrum
from .graphcore import Graph
from .spectra import symmetric_eigenvalues

EPS = 1e-9


class InfeasibleDegreeError(ValueError):
    pass


class InfeasibleCountError(ValueError):
    pass


def raw_partitioned_matrix(H: Graph, p: SrgParams) -> np.ndarray:
    """The unsymmetrized quotient matrix (row i divided by |V_i|)."""
    m = H.n
    rest = p.v - m
    out_edges, rest_edges = _block_counts(H, p)
    A = np.zeros((m + 1, m + 1))
    A[:m, :m] = np.array(H.matrix(), dtype=float).reshape(m, m)
    A[:m, m] = out_edges
    A[m, :m] = np.asarray(out_edges, dtype=float) / rest
    A[m, m] = 2 * rest_edges / rest
    return A


def _block_counts(H: Graph, p: SrgParams) -> tuple[list[int], int]:
    m = H.n
    if m >= p.v:
        raise ValueError("candidate must have fewer vertices than the host")
    degs = H.degrees()
    for u, d in enumerate(degs):
        if d > p.k:
            raise InfeasibleDegreeError(f"vertex {u} has degree {d} > k = {p.k}")
    out_edges = [p.k - d for d in degs]
    twice_rest = p.v * p.k - 2 * H.edge_count() - 2 * sum(out_edges)
    if twice_rest < 0:
        raise InfeasibleCountError("implied edge count outside H is negative")
    return out_edges, twice_rest // 2


def partitioned_matrix(H: Graph, p: SrgParams) -> np.ndarray:
    """Symmetrized partitioned adjacency matrix of order m + 1."""
    m = H.n
    rest = p.v - m
    out_edges, rest_edges = _block_counts(H, p)
    B = np.zeros((m + 1, m + 1))
    B[:m, :m] = np.array(H.matrix(), dtype=float).reshape(m, m)
    col = np.asarray(out_edges, dtype=float) / math.sqrt(rest)
    B[:m, m] = col
    B[m, :m] = col
    B[m, m] = 2 * rest_edges / rest
    return B


def sequence_interlaces(mu: Sequence[float], lam: Sequence[float], eps: float = EPS) -> bool:
    mu = np.asarray(mu, dtype=float)
    lam = np.asarray(lam, dtype=float)
    m, n = len(mu), len(lam)
    if m > n:
        raise ValueError("the interlacing sequence must not be longer than the host sequence")
    if np.any(np.diff(mu) > 0) or np.any(np.diff(lam) > 0):
        raise ValueError("sequences must be sorted descending")
    if m == 0:
        return True
    return bool(np.all(mu <= lam[:m] + eps) and np.all(mu >= lam[n - m:] - eps))


@lru_cache(maxsize=64)
def host_spectrum(p: SrgParams) -> np.ndarray:
    return np.array(srg_spectrum(p).host_spectrum())


def interlaces(H: Graph, p: SrgParams) -> bool:
    try:
        B = partitioned_matrix(H, p)
    except (InfeasibleDegreeError, InfeasibleCountError):
        return False
    return sequence_interlaces(symmetric_eigenvalues(B), host_spectrum(p))


def interlaces_many(graphs: Sequence[Graph], p: SrgParams) -> list[bool]:
    """Batched :func:`interlaces`; graphs are grouped by order internally."""
    out = [False] * len(graphs)
    by_order: dict[int, list[int]] = {}
    for i, G in enumerate(graphs):
        by_order.setdefault(G.n, []).append(i)
    lam = host_spectrum(p)
    for m, idx in by_order.items():
        if m >= p.v:
            raise ValueError("candidate must have fewer vertices than the host")
        if m == 0:
            for i in idx:
                out[i] = interlaces(graphs[i], p)
            continue
        adj = np.array([[[(row >> j) & 1 for j in range(m)] for row in graphs[i].rows] for i in idx], dtype=float)
        flags = _interlace_batch(adj.reshape(len(idx), m, m), p, lam, p.v - m)
        for i, f in zip(idx, flags):
            out[i] = bool(f)
    return out


def _interlace_batch(adj: np.ndarray, p: SrgParams, lam: np.ndarray, rest: int) -> np.ndarray:
    count, m, _ = adj.shape
    degs = adj.sum(axis=2)
    out = p.k - degs
    twice_rest = p.v * p.k - degs.sum(axis=1) - 2 * out.sum(axis=1)
    ok = np.all(out >= 0, axis=1) & (twice_rest >= 0)
    B = np.zeros((count, m + 1, m + 1))
    B[:, :m, :m] = adj
    col = out / math.sqrt(rest)
    B[:, :m, m] = col
    B[:, m, :m] = col
    B[:, m, m] = twice_rest / rest
    mu = np.linalg.eigvalsh(B)[:, ::-1]
    n = len(lam)
    upper = np.all(mu <= lam[: m + 1] + EPS, axis=1)
    lower = np.all(mu >= lam[n - m - 1:] - EPS, axis=1)
    return ok & upper & lower

"""Graph type, graph6 short-form codec and basic structural queries.

Adjacency is held as one Python int per vertex (bit ``j`` of ``rows[i]`` is
set iff ``i ~ j``), so neighbourhood intersections are single ``&`` ops.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full or (row >> i) & 1:
                raise ValueError(f"row {i} has bits outside 0..n-1 or a loop")
            for j in _bits(row):
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee symmetry and a zero diagonal
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        n = len(matrix)
        rows = []
        for i in range(n):
            row = 0
            for j in range(n):
                if matrix[i][j]:
                    row |= 1 << j
            rows.append(row)
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def matrix(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.rows]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``i`` becomes ``perm[i]``."""
        rows = [0] * self.n
        for i, row in enumerate(self.rows):
            new = 0
            for j in _bits(row):
                new |= 1 << perm[j]
            rows[perm[i]] = new
        return Graph._trusted(self.n, tuple(rows))

    def __repr__(self) -> str:
        if self.n <= GRAPH6_MAX_N:
            return f"Graph({write_graph6(self)!r})"
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits(x: int) -> list[int]:
    """Indices of the set bits of ``x``, ascending."""
    return list(_bits(x))


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    s = line.rstrip("\r\n")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    codes = np.frombuffer(s.encode("utf-32-le"), dtype=np.uint32)
    bad = np.flatnonzero((codes < 63) | (codes > 126))
    if bad.size:
        raise Graph6Error(f"invalid byte {s[bad[0]]!r}", base + int(bad[0]))
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated: expected {nbytes} data bytes, got {len(body)}", base + len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage", base + 1 + nbytes)
    groups = (codes[1:] - 63).astype(np.uint8)
    stream = np.unpackbits(groups[:, None], axis=1)[:, 2:].ravel()
    if stream[nbits:].any():
        raise Graph6Error("nonzero padding bits", base + len(s) - 1)
    if n == 0:
        return Graph._trusted(0, ())
    a, b = _upper_index(n)
    M = np.zeros((n, n), dtype=np.uint8)
    M[a, b] = stream[:nbits]
    M[b, a] = stream[:nbits]
    packed = np.packbits(M, axis=1, bitorder="little")
    buf, width = packed.tobytes(), packed.shape[1]
    rows = tuple(int.from_bytes(buf[i:i + width], "little") for i in range(0, n * width, width))
    return Graph._trusted(n, rows)


@lru_cache(maxsize=None)
def _upper_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row and column indices of x(0,1), x(0,2), x(1,2), x(0,3), ... (graph6 order)."""
    a = [u for v in range(1, n) for u in range(v)]
    b = [v for v in range(1, n) for u in range(v)]
    return np.array(a, dtype=np.intp), np.array(b, dtype=np.intp)


def write_graph6(G: Graph) -> str:
    n = G.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {n}")
    if n < 2:
        return chr(63 + n)
    width = (n + 7) // 8
    raw = np.frombuffer(b"".join(row.to_bytes(width, "little") for row in G.rows), dtype=np.uint8)
    M = np.unpackbits(raw.reshape(n, width), axis=1, bitorder="little")
    a, b = _upper_index(n)
    stream = M[a, b]
    stream = np.concatenate([stream, np.zeros(-len(stream) % 6, dtype=np.uint8)]).reshape(-1, 6)
    groups = np.packbits(stream, axis=1)[:, 0] >> 2
    return chr(63 + n) + (groups + 63).astype(np.uint8).tobytes().decode("ascii")


def _check_vertices(G: Graph, vertices: Iterable[int]) -> list[int]:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < G.n:
            raise IndexError(f"vertex {v} out of range for graph on {G.n} vertices")
    return vs


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced on ``S``; new vertex ``i`` is the ``i``-th smallest member of ``S``."""
    vs = _check_vertices(G, S)
    index = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        row = 0
        for w in _bits(G.rows[v]):
            i = index.get(w)
            if i is not None:
                row |= 1 << i
        rows.append(row)
    return Graph._trusted(len(vs), tuple(rows))


def common_neighbor_count(G: Graph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("common_neighbor_count needs two distinct vertices")
    return (G.rows[u] & G.rows[v]).bit_count()


def add_vertex(G: Graph, nbrs: Iterable[int]) -> Graph:
    vs = _check_vertices(G, nbrs)
    mask = vertex_mask(vs)
    rows = list(G.rows)
    for v in vs:
        rows[v] |= 1 << G.n
    rows.append(mask)
    return Graph._trusted(G.n + 1, tuple(rows))


def delete_vertices(G: Graph, S: Iterable[int]) -> Graph:
    drop = set(S)
    return induced_subgraph(G, [v for v in range(G.n) if v not in drop])


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(G.rows)))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for H in graphs:
        rows.extend(row << offset for row in H.rows)
        offset += H.n
    return Graph(offset, tuple(rows))


def is_clique(G: Graph, vertices: Sequence[int]) -> bool:
    return all(G.adjacent(u, v) for u, v in combinations(vertices, 2))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def paley(q: int) -> Graph:
    """Paley graph on a prime ``q`` with q % 4 == 1, or q == 9 over GF(9)."""
    if q == 9:
        # GF(9) = GF(3)[i], i^2 = -1
        elems = [(a, b) for a in range(3) for b in range(3)]
        squares = {((a * a - b * b) % 3, (2 * a * b) % 3) for a, b in elems if (a, b) != (0, 0)}
        def diff(x, y):
            return ((x[0] - y[0]) % 3, (x[1] - y[1]) % 3)
        edges = [(i, j) for i, j in combinations(range(9), 2) if diff(elems[i], elems[j]) in squares]
        return Graph.from_edges(9, edges)
    if q % 4 != 1 or any(q % p == 0 for p in range(2, int(q ** 0.5) + 1)):
        raise ValueError("paley() supports primes q = 1 (mod 4) and q = 9")
    squares = {(x * x) % q for x in range(1, q)}
    return Graph.from_edges(q, [(i, j) for i, j in combinations(range(q), 2) if (j - i) % q in squares])

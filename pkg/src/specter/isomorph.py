"""Canonical forms, automorphism orbits and extended orbits.

Canonical labelling is individualization-refinement: refine an ordered
partition to an equitable one, branch on the vertices of the first
non-singleton cell, and keep the lexicographically largest relabelled
adjacency among the leaves. Automorphisms found on the way (two leaves with
equal certificates) prune sibling branches.

Forms are version-stamped; persisted dedup archives are only comparable
within one ``CANON_VERSION``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .graphcore import Graph, bits, induced_subgraph

CANON_VERSION = 1
_TAG = b"SPC" + bytes([CANON_VERSION])

Cells = list[list[int]]


# --- refinement ---------------------------------------------------------------

def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Coarsest equitable refinement of an ordered partition.

    Split pieces take the place of the cell they came from, ordered by
    neighbour count into the splitter, so the result depends only on the
    ordered partition and never on vertex names.
    """
    cells = [list(c) for c in cells]
    queue = deque(cells)
    queued = {id(c) for c in cells}
    while queue:
        if len(cells) == len(rows):
            break
        splitter = queue.popleft()
        queued.discard(id(splitter))
        wmask = _mask(splitter)
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            groups: dict[int, list[int]] = defaultdict(list)
            for v in cell:
                groups[(rows[v] & wmask).bit_count()].append(v)
            if len(groups) == 1:
                i += 1
                continue
            pieces = [groups[c] for c in sorted(groups)]
            cells[i:i + 1] = pieces
            if id(cell) in queued:
                queued.discard(id(cell))
                queue = deque(c for c in queue if c is not cell)
            for piece in pieces:
                queue.append(piece)
                queued.add(id(piece))
            i += len(pieces)
    return cells


def _individualize(cells: Cells, idx: int, v: int) -> Cells:
    cell = cells[idx]
    rest = [w for w in cell if w != v]
    return cells[:idx] + [[v], rest] + cells[idx + 1:]


def _partition_from_colors(n: int, colors: Optional[Sequence[int]]) -> Cells:
    if colors is None:
        return [list(range(n))] if n else []
    groups: dict[int, list[int]] = defaultdict(list)
    for v, c in enumerate(colors):
        groups[c].append(v)
    return [groups[c] for c in sorted(groups)]


# --- search -------------------------------------------------------------------

@dataclass
class _SearchResult:
    best_cert: tuple
    best_perm: list[int]
    generators: list[list[int]]


def _certificate(rows: Sequence[int], order: Sequence[int]) -> tuple:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        r = 0
        for w in bits(rows[v]):
            r |= 1 << pos[w]
        cert.append(r)
    return tuple(cert)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def _search(rows: Sequence[int], cells: Cells) -> _SearchResult:
    n = len(rows)
    root = refine(rows, cells)
    state = {"first": None, "best": None, "best_cert": None}
    generators: list[list[int]] = []

    def stabilizer_orbit_rep(path: list[int]) -> _UnionFind:
        uf = _UnionFind(n)
        for g in generators:
            if all(g[x] == x for x in path):
                for x in range(n):
                    uf.union(x, g[x])
        return uf

    def leaf(cells: Cells, path: list[int]) -> int:
        order = [c[0] for c in cells]
        cert = _certificate(rows, order)
        if state["first"] is None:
            state["first"] = (cert, order, path)
            state["best"] = (order, path)
            state["best_cert"] = cert
            return len(path)
        first_cert, first_order, first_path = state["first"]
        if cert == first_cert:
            generators.append(_map(first_order, order))
            return _common_prefix(path, first_path)
        if cert == state["best_cert"]:
            best_order, best_path = state["best"]
            generators.append(_map(best_order, order))
            return _common_prefix(path, best_path)
        if cert > state["best_cert"]:
            state["best_cert"] = cert
            state["best"] = (order, path)
        return len(path)

    def visit(cells: Cells, path: list[int]) -> int:
        # returns the depth to which the search should unwind
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            return leaf(cells, path)
        explored: list[int] = []
        for v in sorted(cells[idx]):
            if explored:
                uf = stabilizer_orbit_rep(path)
                rv = uf.find(v)
                if any(uf.find(w) == rv for w in explored):
                    continue
            explored.append(v)
            child = refine(rows, _individualize(cells, idx, v))
            back = visit(child, path + [v])
            if back < len(path):
                return back
        return len(path)

    visit(root, [])
    best_order, _ = state["best"]
    return _SearchResult(state["best_cert"], best_order, generators)


def _map(src: Sequence[int], dst: Sequence[int]) -> list[int]:
    g = [0] * len(src)
    for a, b in zip(src, dst):
        g[a] = b
    return g


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


# --- public API ---------------------------------------------------------------

def _encode(n: int, cell_sizes: Sequence[int], colors: Sequence[int], cert: Sequence[int]) -> bytes:
    width = (n + 7) // 8
    out = bytearray(_TAG)
    out += n.to_bytes(4, "big")
    out += len(cell_sizes).to_bytes(4, "big")
    for size, color in zip(cell_sizes, colors):
        out += size.to_bytes(4, "big")
        out += int(color).to_bytes(8, "big", signed=True)
    for row in cert:
        out += row.to_bytes(width, "big")
    return bytes(out)


def canonical_labeling(G: Graph, colors: Optional[Sequence[int]] = None) -> tuple[bytes, list[int]]:
    """Return (form, order) where ``order[i]`` is the vertex placed at canonical position i."""
    cells = _partition_from_colors(G.n, colors)
    if G.n == 0:
        return _encode(0, [], [], []), []
    res = _search(G.rows, cells)
    color_keys = sorted(set(colors)) if colors is not None else [0]
    sizes = [len(c) for c in cells]
    return _encode(G.n, sizes, color_keys, res.best_cert), res.best_perm


def canonical_form(G: Graph, colors: Optional[Sequence[int]] = None) -> bytes:
    """Isomorphism-invariant byte string; ``colors`` (ints) must be preserved by isomorphisms."""
    return canonical_labeling(G, colors)[0]


def canonical_graph(G: Graph) -> Graph:
    _, order = canonical_labeling(G)
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    return G.relabel(perm)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.edge_count() == H.edge_count() and canonical_form(G) == canonical_form(H)


def _cells_form(rows: Sequence[int], cells: Cells) -> bytes:
    res = _search(rows, cells)
    return _encode(len(rows), [len(c) for c in cells], range(len(cells)), res.best_cert)


def _orbits_from_generators(n: int, generators: Iterable[Sequence[int]]) -> _UnionFind:
    uf = _UnionFind(n)
    for g in generators:
        for x in range(n):
            uf.union(x, g[x])
    return uf


def _classes(uf: _UnionFind, n: int) -> list[list[int]]:
    groups: dict[int, list[int]] = defaultdict(list)
    for v in range(n):
        groups[uf.find(v)].append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def automorphism_orbits(G: Graph, colors: Optional[Sequence[int]] = None) -> list[list[int]]:
    """Vertex orbits of the full (colour-preserving) automorphism group, sorted by least member."""
    n = G.n
    if n == 0:
        return []
    cells = _partition_from_colors(n, colors)
    res = _search(G.rows, cells)
    uf = _orbits_from_generators(n, res.generators)
    # generator orbits can only be finer than the true orbits; settle the rest
    # by comparing individualized canonical forms within each equitable cell
    root = refine(G.rows, cells)
    for idx, cell in enumerate(root):
        reps = sorted({uf.find(v) for v in cell})
        if len(reps) < 2:
            continue
        forms: dict[bytes, int] = {}
        for rep in reps:
            f = _cells_form(G.rows, _individualize(root, idx, rep))
            if f in forms:
                uf.union(forms[f], rep)
            else:
                forms[f] = rep
    return _classes(uf, n)


def automorphism_group_order(G: Graph, colors: Optional[Sequence[int]] = None) -> int:
    """|Aut(G)| via orbit sizes along a stabilizer chain."""
    cells = refine(G.rows, _partition_from_colors(G.n, colors))
    order = 1
    while True:
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            return order
        cell = sorted(cells[idx])
        v = cell[0]
        target = _cells_form(G.rows, _individualize(cells, idx, v))
        orbit = 1 + sum(1 for w in cell[1:] if _cells_form(G.rows, _individualize(cells, idx, w)) == target)
        order *= orbit
        cells = refine(G.rows, _individualize(cells, idx, v))


def neighborhood_subgraph(G: Graph, v: int) -> Graph:
    return induced_subgraph(G, bits(G.rows[v]))


def extended_orbits(G: Graph) -> list[list[int]]:
    """Partition grouping u, v iff G[N(u)] and G[N(v)] are isomorphic.

    Computed from automorphism orbits (a refinement of the answer): one
    neighbourhood canonical form per orbit, orbits with equal forms merged.
    """
    n = G.n
    if n == 0:
        return []
    res = _search(G.rows, [list(range(n))])
    uf = _orbits_from_generators(n, res.generators)
    orbits = _classes(uf, n)
    by_form: dict[bytes, list[int]] = defaultdict(list)
    for orbit in orbits:
        by_form[canonical_form(neighborhood_subgraph(G, orbit[0]))].extend(orbit)
    return sorted((sorted(c) for c in by_form.values()), key=lambda c: c[0])


def dedup_canonical(graphs: Iterable[Graph]) -> Iterator[Graph]:
    """One representative per isomorphism class, in ascending canonical-form order.

    The representative emitted is the canonically relabelled graph, so the
    output does not depend on input order.
    """
    seen: dict[bytes, Graph] = {}
    for G in graphs:
        form, order = canonical_labeling(G)
        if form not in seen:
            perm = [0] * G.n
            for i, v in enumerate(order):
                perm[v] = i
            seen[form] = G.relabel(perm)
    for form in sorted(seen):
        yield seen[form]

"""Clique-number decision: coloring-bounded branch and bound, plus the
orbit-peeling recursion for highly symmetric graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from .graphcore import Graph, bits, induced_subgraph, is_clique
from .isomorph import extended_orbits


@dataclass(frozen=True)
class CliqueResult:
    """``reached`` is True when a clique of size >= ``cutoff`` was found; then
    ``size`` equals the cutoff. Otherwise ``size`` is the exact clique number."""

    reached: bool
    size: int
    witness: tuple[int, ...] = field(default=())

    @property
    def verdict(self) -> str:
        return f"reached({self.size})" if self.reached else f"exact({self.size})"


def greedy_coloring_bound(G: Graph) -> int:
    """Colours used by first-fit in descending-degree order (ties by index)."""
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    color = {}
    ncolors = 0
    for v in order:
        used = {color[w] for w in bits(G.rows[v]) if w in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
        ncolors = max(ncolors, c + 1)
    return ncolors


def _color_sort(rows, cand: int) -> tuple[list[int], list[int]]:
    """Greedy colour classes of the candidate set; returns vertices and their
    colour numbers, ascending by colour (the MCQ ordering)."""
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    c = 0
    while uncolored:
        c += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~rows[v] & ~low
            uncolored &= ~low
            order.append(v)
            colors.append(c)
    return order, colors


def max_clique_bnb(G: Graph, cutoff: int) -> CliqueResult:
    """Exact clique number if it is below ``cutoff``; otherwise a witness of size ``cutoff``."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    rows = G.rows
    best: list[int] = []
    target = cutoff

    def expand(clique: list[int], cand: int) -> bool:
        nonlocal best
        order, colors = _color_sort(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + colors[i] <= len(best):
                return False
            v = order[i]
            clique.append(v)
            sub = cand & rows[v]
            if sub:
                if expand(clique, sub):
                    return True
            elif len(clique) > len(best):
                best = clique[:]
                if len(best) >= target:
                    return True
            clique.pop()
            cand &= ~(1 << v)
        return False

    if G.n:
        expand([], (1 << G.n) - 1)
    if len(best) >= target:
        witness = tuple(sorted(best[:target]))
        assert is_clique(G, witness)
        return CliqueResult(True, target, witness)
    assert is_clique(G, best)
    return CliqueResult(False, len(best), tuple(sorted(best)))


def clique_number_symmetric(G: Graph, cutoff: int) -> CliqueResult:
    """Clique decision that removes whole extended orbits at a time.

    For a class o of vertices with pairwise isomorphic neighbourhoods, every
    vertex of o lies in a largest clique of size omega(G[N(v)]) + 1 for any
    v in o, so after recursing on one neighbourhood the class can be
    deleted. The neighbourhood recursion asks for cutoff - 1, which keeps the
    result exact. Same contract as :func:`max_clique_bnb`.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    return _symmetric(G, list(range(G.n)), cutoff, depth=0, limit=G.n)


def _symmetric(G: Graph, labels: list[int], cutoff: int, depth: int, limit: int) -> CliqueResult:
    if depth > limit:
        raise RuntimeError("orbit recursion did not shrink the graph")
    if cutoff <= 0:
        return CliqueResult(True, cutoff, ())
    best = CliqueResult(False, 0, ())
    while G.n > cutoff:
        classes = extended_orbits(G)
        if len(classes) == G.n:
            break
        o = max(classes, key=lambda c: (len(c), -c[0]))
        v = o[0]
        nbrs = bits(G.rows[v])
        sub = _symmetric(induced_subgraph(G, nbrs), [labels[w] for w in nbrs], cutoff - 1, depth + 1, limit)
        witness = tuple(sorted(sub.witness + (labels[v],)))
        if sub.reached:
            return CliqueResult(True, cutoff, witness)
        if sub.size + 1 > best.size:
            best = CliqueResult(False, sub.size + 1, witness)
        drop = set(o)
        keep = [w for w in range(G.n) if w not in drop]
        G = induced_subgraph(G, keep)
        labels = [labels[w] for w in keep]
    rest = max_clique_bnb(G, cutoff)
    witness = tuple(sorted(labels[w] for w in rest.witness))
    if rest.reached:
        return CliqueResult(True, cutoff, witness)
    if rest.size > best.size:
        return CliqueResult(False, rest.size, witness)
    return best


def clique_number(G: Graph) -> int:
    return max_clique_bnb(G, G.n + 1).size


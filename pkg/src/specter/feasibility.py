"""SRG parameter arithmetic and the b-vector counting equations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Optional, Sequence


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if min(self.v, self.k, self.lam, self.mu) < 0:
            raise ParameterError("SRG parameters must be nonnegative")
        if not 0 < self.k < self.v:
            raise ParameterError("need 0 < k < v")
        if self.mu < 1:
            raise ParameterError("need mu >= 1")
        if self.lam >= self.k:
            raise ParameterError("need lambda < k")

    def __str__(self) -> str:
        return f"({self.v},{self.k},{self.lam},{self.mu})"


@dataclass(frozen=True)
class SpectrumDescriptor:
    """Eigenvalues k > r > s and multiplicities f (of r), g (of s).

    ``r``/``s`` are ints and ``f``/``g`` Fractions whenever the discriminant
    is a perfect square; otherwise r, s are floats (and f, g floats unless
    the graph would be a conference graph, where f = g = (v-1)/2).
    """

    k: int
    r: float
    s: float
    f: Fraction | float
    g: Fraction | float
    conference: bool

    @property
    def integral(self) -> bool:
        return all(isinstance(x, Fraction) and x.denominator == 1 and x >= 0 for x in (self.f, self.g))

    @property
    def exact_eigenvalues(self) -> bool:
        return isinstance(self.r, int) and isinstance(self.s, int)

    def host_spectrum(self) -> list[float]:
        """k once, r f times, s g times, descending (requires integral f, g)."""
        if not self.integral:
            raise ParameterError("multiplicities are not integral")
        return [float(self.k)] + [float(self.r)] * int(self.f) + [float(self.s)] * int(self.g)


def check_edge_equation(p: SrgParams) -> bool:
    return (p.v - p.k - 1) * p.mu == p.k * (p.k - p.lam - 1)


def srg_spectrum(p: SrgParams) -> SpectrumDescriptor:
    disc = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    if disc < 0:
        raise ParameterError(f"negative discriminant {disc} for {p}")
    if disc == 0:
        raise ParameterError(f"zero discriminant for {p}: r = s")
    numer = 2 * p.k + (p.v - 1) * (p.lam - p.mu)
    root = math.isqrt(disc)
    if root * root == disc:
        r = (p.lam - p.mu + root) // 2
        s = (p.lam - p.mu - root) // 2
        f = Fraction(p.v - 1, 2) - Fraction(numer, 2 * root)
        g = Fraction(p.v - 1, 2) + Fraction(numer, 2 * root)
        return SpectrumDescriptor(p.k, r, s, f, g, conference=numer == 0)
    sq = math.sqrt(disc)
    r = (p.lam - p.mu + sq) / 2
    s = (p.lam - p.mu - sq) / 2
    if numer == 0:
        half = Fraction(p.v - 1, 2)
        return SpectrumDescriptor(p.k, r, s, half, half, conference=True)
    f = ((p.v - 1) - numer / sq) / 2
    g = ((p.v - 1) + numer / sq) / 2
    return SpectrumDescriptor(p.k, r, s, f, g, conference=False)


def feasibility_report(p: SrgParams) -> dict:
    report = {"params": str(p), "edge_equation": check_edge_equation(p)}
    try:
        sp = srg_spectrum(p)
    except ParameterError as exc:
        report["error"] = str(exc)
        return report
    report.update(r=sp.r, s=sp.s, f=sp.f, g=sp.g, conference=sp.conference, integral=sp.integral)
    if sp.integral:
        report["star_complement_order_r"] = p.v - int(sp.f)
        report["star_complement_order_s"] = p.v - int(sp.g)
    report["feasible"] = bool(report["edge_equation"] and sp.integral)
    return report


@dataclass(frozen=True)
class DegreeHistogram:
    d: tuple[int, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.d):
            raise ValueError("degree counts must be nonnegative")
        m = sum(self.d)
        if any(x for x in self.d[m:]):
            raise ValueError("a graph on m vertices has no vertex of degree >= m")
        if sum(i * x for i, x in enumerate(self.d)) % 2:
            raise ValueError("degree sum must be even")

    @property
    def m(self) -> int:
        return sum(self.d)

    @classmethod
    def of_graph(cls, H) -> "DegreeHistogram":
        d = [0] * H.n
        for deg in H.degrees():
            d[deg] += 1
        return cls(tuple(d))


def b_vector_targets(p: SrgParams, hist: DegreeHistogram) -> tuple[int, int, int]:
    """Right-hand sides of the three counting equations (sum b, sum i b, sum C(i,2) b)."""
    m = hist.m
    deg_sum = sum(i * x for i, x in enumerate(hist.d))
    pair_sum = sum(comb(i, 2) * x for i, x in enumerate(hist.d))
    n0 = p.v - m
    n1 = m * p.k - deg_sum
    twice_n2 = 2 * comb(m, 2) * p.mu - 2 * pair_sum + (p.lam - p.mu) * deg_sum
    if twice_n2 % 2:
        return n0, n1, -1
    return n0, n1, twice_n2 // 2


def enumerate_b_vectors(
    p: SrgParams,
    hist: DegreeHistogram,
    caps: Optional[Mapping[int, int]] = None,
) -> list[tuple[int, ...]]:
    """All nonnegative (b_0..b_m) solving the counting equations, ascending lexicographically.

    b_0, b_1, b_2 are solved for; b_3..b_m are enumerated under the budget of
    the third equation. ``caps`` maps index -> upper bound.
    """
    caps = dict(caps or {})
    m = hist.m
    n0, n1, n2 = b_vector_targets(p, hist)
    if min(n0, n1, n2) < 0:
        return []
    if any(i < 0 or i > m for i in caps) or any(c < 0 for c in caps.values()):
        return []
    cap = [caps.get(i) for i in range(m + 1)]
    out: list[tuple[int, ...]] = []

    def close(tail: list[int]):
        # tail holds b_3..b_m
        s0 = sum(tail)
        s1 = sum(i * b for i, b in enumerate(tail, start=3))
        s2 = sum(comb(i, 2) * b for i, b in enumerate(tail, start=3))
        b2 = n2 - s2 if m >= 2 else 0
        if m < 2 and n2 - s2 != 0:
            return
        b1 = n1 - s1 - 2 * b2 if m >= 1 else 0
        if m < 1 and n1 - s1 - 2 * b2 != 0:
            return
        b0 = n0 - s0 - b1 - b2
        head = [b0, b1, b2][: m + 1]
        if any(x < 0 for x in head):
            return
        vec = tuple(head + tail)
        if any(c is not None and vec[i] > c for i, c in enumerate(cap)):
            return
        out.append(vec)

    def rec(i: int, tail: list[int], budget: int):
        if i > m:
            close(tail)
            return
        hi = budget // comb(i, 2)
        if cap[i] is not None:
            hi = min(hi, cap[i])
        for b in range(hi + 1):
            tail.append(b)
            rec(i + 1, tail, budget - comb(i, 2) * b)
            tail.pop()

    rec(3, [], n2)
    out.sort()
    return out


def observed_b_vector(G, S: Sequence[int]) -> tuple[int, ...]:
    """b-vector of the induced subgraph on S inside G (for checking against the enumerator)."""
    from .graphcore import vertex_mask

    mask = vertex_mask(S)
    b = [0] * (len(set(S)) + 1)
    for u in range(G.n):
        if not (mask >> u) & 1:
            b[(G.rows[u] & mask).bit_count()] += 1
    return tuple(b)

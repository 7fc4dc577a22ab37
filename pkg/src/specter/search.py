"""Isomorph-free extension of candidate subgraphs to star-complement order and
the end-to-end verdict pipeline.

Extension is level-wise: every graph of a level gets one new vertex in all
possible ways, non-interlacing graphs are dropped and the level is reduced to
one representative per isomorphism class before the next round.
"""

from __future__ import annotations

import logging
import os
import time
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .feasibility import SrgParams, srg_spectrum
from .graphcore import Graph, add_vertex, induced_subgraph, parse_graph6, write_graph6
from .interlacing import EPS, host_spectrum, interlaces
from .isomorph import automorphism_group_order, canonical_labeling
from .spectra import eigenvalue_multiplicity_exact
from .starcomp import TooSmall, comparability_graph, has_f_clique

log = logging.getLogger(__name__)

REFUTED = "refuted"
WITNESS_FOUND = "witness-found"
INCONCLUSIVE = "exhausted-inconclusive"

_BATCH = 4096


@dataclass(frozen=True)
class SearchContext:
    params: SrgParams
    r: int
    target_order: int
    clique_target: int

    @classmethod
    def for_params(cls, p: SrgParams, r: Optional[int] = None) -> "SearchContext":
        sp = srg_spectrum(p)
        if not sp.integral or not sp.exact_eigenvalues:
            raise ValueError(f"{p} has no integral restricted eigenvalues")
        if r is None:
            r = sp.r
        if r == sp.r:
            mult = int(sp.f)
        elif r == sp.s:
            mult = int(sp.g)
        else:
            raise ValueError(f"{r} is not a restricted eigenvalue of {p} (r={sp.r}, s={sp.s})")
        return cls(p, r, p.v - mult, mult)


@dataclass
class Verdict:
    status: str
    generated: int = 0
    pruned: int = 0
    passed: int = 0
    candidates: int = 0
    comparability_graphs: int = 0
    too_small: int = 0
    witness: Optional[Graph] = None
    checkpoint: Optional[str] = None

    def counts(self) -> dict:
        return {
            "generated": self.generated,
            "pruned": self.pruned,
            "passed": self.passed,
            "candidates": self.candidates,
            "comparability_graphs": self.comparability_graphs,
            "too_small": self.too_small,
        }


# --- one extension level --------------------------------------------------------

def _extension_flags(H: Graph, masks: np.ndarray, p: SrgParams) -> np.ndarray:
    """Interlacing flags for H plus a vertex joined to each subset in ``masks``."""
    m = H.n
    lam = host_spectrum(p)
    rest = p.v - m - 1
    base = np.array(H.matrix(), dtype=float).reshape(m, m)
    base_deg = base.sum(axis=1)
    n = len(lam)
    out = np.zeros(len(masks), dtype=bool)
    shifts = np.arange(m, dtype=np.int64)
    for start in range(0, len(masks), _BATCH):
        chunk = masks[start:start + _BATCH]
        cnt = len(chunk)
        new = ((chunk[:, None] >> shifts) & 1).astype(float)
        degs = np.empty((cnt, m + 1))
        degs[:, :m] = base_deg + new
        degs[:, m] = new.sum(axis=1)
        outdeg = p.k - degs
        twice_rest = p.v * p.k - degs.sum(axis=1) - 2 * outdeg.sum(axis=1)
        ok = np.all(outdeg >= 0, axis=1) & (twice_rest >= 0)
        B = np.zeros((cnt, m + 2, m + 2))
        B[:, :m, :m] = base
        B[:, :m, m] = new
        B[:, m, :m] = new
        col = outdeg / np.sqrt(rest)
        B[:, : m + 1, m + 1] = col
        B[:, m + 1, : m + 1] = col
        B[:, m + 1, m + 1] = twice_rest / rest
        mu = np.linalg.eigvalsh(B)[:, ::-1]
        upper = np.all(mu <= lam[: m + 2] + EPS, axis=1)
        lower = np.all(mu >= lam[n - m - 2:] - EPS, axis=1)
        out[start:start + cnt] = ok & upper & lower
    return out


def _mask_vertices(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


def interlacing_extensions(H: Graph, p: SrgParams, required: int = 0) -> list[tuple[int, Graph]]:
    """(mask, graph) for every subset mask containing ``required`` whose extension interlaces."""
    if H.n + 1 >= p.v:
        return []
    free = [i for i in range(H.n) if not (required >> i) & 1]
    count = 1 << len(free)
    sub = np.arange(count, dtype=np.int64)
    masks = np.full(count, required, dtype=np.int64)
    for bit, v in enumerate(free):
        masks |= ((sub >> bit) & 1) << v
    flags = _extension_flags(H, masks, p)
    return [(int(mk), add_vertex(H, _mask_vertices(int(mk)))) for mk in masks[flags]]


def _canonical(G: Graph) -> tuple[bytes, Graph]:
    form, order = canonical_labeling(G)
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    return form, G.relabel(perm)


def extend_one_vertex(H: Graph, ctx: SearchContext, stats: Optional[Counter] = None) -> list[Graph]:
    """All interlacing one-vertex extensions of H, one per isomorphism class, in canonical order."""
    exts = interlacing_extensions(H, ctx.params)
    if stats is not None:
        stats["generated"] += 1 << H.n
        stats["passed"] += len(exts)
        stats["pruned"] += (1 << H.n) - len(exts)
    seen: dict[bytes, Graph] = {}
    for _, G in exts:
        form, canon = _canonical(G)
        seen.setdefault(form, canon)
    return [seen[f] for f in sorted(seen)]


def deficient_pairs(H: Graph, p: SrgParams) -> list[tuple[int, int]]:
    out = []
    for u, v in combinations(range(H.n), 2):
        common = (H.rows[u] & H.rows[v]).bit_count()
        quota = p.lam if H.adjacent(u, v) else p.mu
        if common < quota:
            out.append((u, v))
    return out


def _graceful_analysis(H: Graph, ctx: SearchContext):
    exts = interlacing_extensions(H, ctx.params)
    bad_masks = [mk for mk, G in exts if eigenvalue_multiplicity_exact(G, ctx.r) > 0]
    pairs = []
    if H.n > 2:
        for u, v in deficient_pairs(H, ctx.params):
            both = (1 << u) | (1 << v)
            if not any(mk & both == both for mk in bad_masks):
                pairs.append((u, v))
    return exts, pairs


def graceful_pairs(H: Graph, ctx: SearchContext) -> list[tuple[int, int]]:
    """Deficient pairs (u, v) such that every interlacing extension joined to both
    u and v lacks the eigenvalue r."""
    return _graceful_analysis(H, ctx)[1]


def _extend_graph(H: Graph, ctx: SearchContext, use_graceful: bool) -> tuple[list[tuple[bytes, Graph]], Counter]:
    stats: Counter = Counter()
    stats["generated"] += 1 << H.n
    if use_graceful:
        exts, pairs = _graceful_analysis(H, ctx)
    else:
        exts, pairs = interlacing_extensions(H, ctx.params), []
    stats["passed"] += len(exts)
    stats["pruned"] += (1 << H.n) - len(exts)
    forms = {}
    form_of = []
    for mk, G in exts:
        form, canon = _canonical(G)
        forms.setdefault(form, canon)
        form_of.append((mk, form))
    chosen = set(forms)
    if pairs:
        # filter on masks before merging: an isomorphism class qualifies if
        # any of its masks is joined to both members of the pair
        best = None
        for u, v in pairs:
            both = (1 << u) | (1 << v)
            sel = {f for mk, f in form_of if mk & both == both}
            if best is None or len(sel) < len(best):
                best = sel
        stats["graceful"] += 1
        chosen = best
    return [(f, forms[f]) for f in sorted(chosen)], stats


def _extend_worker(args):
    g6, ctx, use_graceful = args
    pairs, stats = _extend_graph(parse_graph6(g6), ctx, use_graceful)
    return [(f, write_graph6(G)) for f, G in pairs], stats


def extend_level(
    graphs: Sequence[Graph],
    ctx: SearchContext,
    use_graceful: bool = True,
    jobs: int = 1,
    stats: Optional[Counter] = None,
) -> list[Graph]:
    """One level: extend every graph, merge, deduplicate, canonical order."""
    merged: dict[bytes, Graph] = {}
    tasks = [(write_graph6(G), ctx, use_graceful) for G in graphs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_extend_worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_extend_worker(t) for t in tasks]
    for pairs, st in results:
        if stats is not None:
            stats.update(st)
        for f, g6 in pairs:
            merged.setdefault(f, parse_graph6(g6))
    return [merged[f] for f in sorted(merged)]


def final_filter(graphs: Iterable[Graph], ctx: SearchContext, stats: Optional[Counter] = None) -> list[Graph]:
    out = []
    for G in graphs:
        ok = eigenvalue_multiplicity_exact(G, ctx.r) == 0 and interlaces(G, ctx.params)
        if stats is not None:
            stats["final_pruned" if not ok else "final_passed"] += 1
        if ok:
            out.append(G)
    return out


# --- checkpoints -------------------------------------------------------------------

def read_manifest(path: Path) -> dict:
    out = {}
    if path.exists():
        for line in path.read_text().splitlines():
            if "=" in line and not line.startswith("#"):
                key, value = line.split("=", 1)
                out[key.strip()] = value.strip()
    return out


def write_manifest(path: Path, values: dict):
    tmp = path.with_suffix(".tmp")
    tmp.write_text("".join(f"{k}={v}\n" for k, v in values.items()))
    os.replace(tmp, path)


def write_level(path: Path, graphs: Iterable[Graph]):
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w") as fh:
        for G in graphs:
            fh.write(write_graph6(G) + "\n")
    os.replace(tmp, path)


def read_level(path: Path) -> list[Graph]:
    with open(path) as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


def _ctx_manifest(ctx: SearchContext, seed: Graph) -> dict:
    p = ctx.params
    return {
        "params": f"{p.v},{p.k},{p.lam},{p.mu}",
        "r": ctx.r,
        "target_order": ctx.target_order,
        "clique_target": ctx.clique_target,
        "seed": write_graph6(seed),
    }


def extend_to_order(
    H: Graph,
    ctx: SearchContext,
    use_graceful: bool = True,
    jobs: int = 1,
    checkpoint_dir: Optional[str | Path] = None,
    stats: Optional[Counter] = None,
) -> Iterator[Graph]:
    """Stream of target-order graphs containing H that interlace and lack r."""
    if H.n > ctx.target_order:
        raise ValueError("H is already larger than the target order")
    if eigenvalue_multiplicity_exact(H, ctx.r) > 0:
        raise ValueError(f"{ctx.r} is an eigenvalue of the starting graph")
    if ctx.target_order - H.n > 2:
        warnings.warn(
            f"extending {ctx.target_order - H.n} vertices (from order {H.n} to {ctx.target_order}); "
            "beyond two added vertices the candidate lists usually explode",
            RuntimeWarning,
            stacklevel=2,
        )
    ckpt = Path(checkpoint_dir) if checkpoint_dir is not None else None
    level = [_canonical(H)[1]]
    order = H.n
    if ckpt is not None:
        ckpt.mkdir(parents=True, exist_ok=True)
        manifest = read_manifest(ckpt / "manifest.txt")
        expected = _ctx_manifest(ctx, H)
        if manifest and all(manifest.get(k) == str(v) for k, v in expected.items()):
            done = int(manifest.get("level", H.n))
            if (ckpt / f"level_{done}.g6").exists():
                level, order = read_level(ckpt / f"level_{done}.g6"), done
                log.info("resuming from level %d (%d graphs)", done, len(level))
        else:
            write_level(ckpt / f"level_{order}.g6", level)
            write_manifest(ckpt / "manifest.txt", {**expected, "level": order, "count": len(level)})
    while order < ctx.target_order:
        level = extend_level(level, ctx, use_graceful, jobs, stats)
        order += 1
        log.info("level %d: %d graphs", order, len(level))
        if ckpt is not None:
            write_level(ckpt / f"level_{order}.g6", level)
            write_manifest(ckpt / "manifest.txt", {**_ctx_manifest(ctx, H), "level": order, "count": len(level)})
    yield from final_filter(level, ctx, stats)


def scc_select(H: Graph, ctx: SearchContext) -> list[int]:
    """A largest vertex set S, |S| <= target order, with r not an eigenvalue of H[S].

    Ties go to the largest automorphism group, then to the lexicographically
    smallest vertex list.
    """
    mult = eigenvalue_multiplicity_exact(H, ctx.r)
    top = min(ctx.target_order, H.n - mult)
    for size in range(top, -1, -1):
        found = [list(S) for S in combinations(range(H.n), size)
                 if eigenvalue_multiplicity_exact(induced_subgraph(H, S), ctx.r) == 0]
        if found:
            if len(found) == 1:
                return found[0]
            return min(found, key=lambda S: (-automorphism_group_order(induced_subgraph(H, S)), S))
    return []


# --- pipeline ------------------------------------------------------------------------

def pipeline_check(
    seed: Graph,
    ctx: SearchContext,
    use_graceful: bool = True,
    jobs: int = 1,
    checkpoint_dir: Optional[str | Path] = None,
    time_budget: Optional[float] = None,
) -> Verdict:
    """Seed -> largest r-free subgraph -> star-complement candidates -> f-clique test."""
    verdict = Verdict(REFUTED)
    stats: Counter = Counter()
    if seed.n < ctx.params.v:
        verdict.generated += 1
        if not interlaces(seed, ctx.params):
            verdict.pruned += 1
            return verdict
        verdict.passed += 1
    deadline = time.monotonic() + time_budget if time_budget is not None else None
    ckpt = Path(checkpoint_dir) if checkpoint_dir is not None else None
    S = scc_select(seed, ctx)
    base = induced_subgraph(seed, S)
    try:
        candidates = list(extend_to_order(base, ctx, use_graceful, jobs, ckpt, stats))
    except KeyboardInterrupt:
        verdict.status = INCONCLUSIVE
        verdict.checkpoint = str(ckpt) if ckpt else None
        return verdict
    verdict.generated += stats["generated"] + stats["final_passed"] + stats["final_pruned"]
    verdict.pruned += stats["pruned"] + stats["final_pruned"]
    verdict.passed += stats["passed"] + stats["final_passed"]
    verdict.candidates = len(candidates)
    start = 0
    manifest = read_manifest(ckpt / "manifest.txt") if ckpt else {}
    if ckpt and manifest.get("level") == str(ctx.target_order):
        start = int(manifest.get("comp_done", 0))
    try:
        for i in range(start, len(candidates)):
            if deadline is not None and time.monotonic() > deadline:
                raise KeyboardInterrupt
            C = comparability_graph(candidates[i], ctx.r, min_order=ctx.clique_target)
            if isinstance(C, TooSmall):
                verdict.too_small += 1
            else:
                verdict.comparability_graphs += 1
                if has_f_clique(C, ctx.clique_target):
                    verdict.status = WITNESS_FOUND
                    verdict.witness = candidates[i]
                    return verdict
            if ckpt:
                manifest = read_manifest(ckpt / "manifest.txt")
                manifest["comp_done"] = i + 1
                write_manifest(ckpt / "manifest.txt", manifest)
    except KeyboardInterrupt:
        verdict.status = INCONCLUSIVE
        verdict.checkpoint = str(ckpt) if ckpt else None
    return verdict

"""Monte Carlo estimation of cut fractions and reliability curves.

Each run draws one uniform removal order and scores, for every removal
count j, whether the residual graph is disconnected. Averaging the
indicator over runs estimates the cut fraction c_j, and plugging the
estimates into the C-form binomial mixture reconstructs the curve.

A literal delete-and-recheck sweep costs O(N(N+L)) per run. The runs here
are executed backwards instead: nodes (or links) are inserted in reverse
removal order into a union-find structure while tracking the component
count, which gives identical per-permutation answers in O((N+L) alpha).
Runs are seeded individually by mixing the root seed with the run index,
so results do not depend on how runs are split across worker processes.
"""

from __future__ import annotations

import logging
import multiprocessing
import os
from dataclasses import dataclass

import numpy as np

from .curve import Curve
from .exact import ReliabilityCoefficients, bernstein_mixture, _clamp01
from .graph import Graph

_MASK64 = (1 << 64) - 1

# below this size, an inline shuffle beats the per-run numpy generator setup
_SMALL_PERMUTATION = 32


def mix_seed(seed: int, index: int) -> int:
    """SplitMix64 step: the per-run seed for run `index` under a root seed."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def resolve_workers(workers=None) -> int:
    """Worker processes to use; the RELPOLY_THREADS env var caps the value."""
    w = workers if workers is not None else 1
    env = os.environ.get("RELPOLY_THREADS")
    if env:
        w = min(w, max(1, int(env)))
    return max(1, min(w, os.cpu_count() or 1))


@dataclass(frozen=True)
class CutFractionEstimate:
    """Estimated disconnection probabilities c_j = R_j / runs, j = 0..dimension.

    kind "node": j counts removed nodes. kind "link": j counts removed links
    (all nodes stay present).
    """

    kind: str
    dimension: int
    counts: tuple
    runs: int
    seed: int

    def __post_init__(self):
        if len(self.counts) != self.dimension + 1:
            raise ValueError("need one count per removal size 0..dimension")
        if any(c < 0 or c > self.runs for c in self.counts):
            raise ValueError("counts must lie in [0, runs]")

    @property
    def fractions(self) -> tuple:
        return tuple(c / self.runs for c in self.counts)


def _permutation(n: int, run_seed: int) -> list:
    if n >= _SMALL_PERMUTATION:
        return np.random.Generator(np.random.PCG64(run_seed)).permutation(n).tolist()
    # Fisher-Yates driven by a SplitMix64 stream; index draws use the
    # multiply-shift trick, whose bias of at most n/2^64 is irrelevant here
    perm = list(range(n))
    state = run_seed
    for i in range(n - 1, 0, -1):
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        j = (z * (i + 1)) >> 64
        perm[i], perm[j] = perm[j], perm[i]
    return perm


def _node_disconnection_into(adj, n: int, perm, out):
    """Add 1 to out[j] for every j in 0..N whose residual is disconnected.

    perm is the removal order; insertion proceeds from its tail. The residual
    after j removals is connected iff exactly one component remains among the
    N - j inserted nodes; the empty residual (j = N) is disconnected.
    """
    out[n] += 1
    pos = [0] * n
    for t in range(n):
        pos[perm[t]] = t
    parent = list(range(n))
    size = [1] * n
    ncomp = 0
    for t in range(n - 1, -1, -1):
        v = perm[t]
        ncomp += 1
        for u in adj[v]:
            if pos[u] > t:
                x = v
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                y = u
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    if size[x] < size[y]:
                        x, y = y, x
                    parent[y] = x
                    size[x] += size[y]
                    ncomp -= 1
        if ncomp != 1:
            out[t] += 1


def _link_disconnection_into(edges, n: int, l: int, perm, out):
    """Link analogue: all nodes present, links inserted in reverse removal order."""
    if n != 1:
        out[l] += 1
    parent = list(range(n))
    size = [1] * n
    ncomp = n
    for t in range(l - 1, -1, -1):
        u, v = edges[perm[t]]
        x = u
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        y = v
        while parent[y] != y:
            parent[y] = parent[parent[y]]
            y = parent[y]
        if x != y:
            if size[x] < size[y]:
                x, y = y, x
            parent[y] = x
            size[x] += size[y]
            ncomp -= 1
        if ncomp != 1:
            out[t] += 1


def node_removal_profile(graph: Graph, removal_order) -> list:
    """Disconnection flags for j = 0..N under one explicit removal order."""
    order = list(removal_order)
    if sorted(order) != list(range(graph.num_nodes)):
        raise ValueError("removal order must be a permutation of all node ids")
    out = [0] * (graph.num_nodes + 1)
    _node_disconnection_into(graph.adjacency, graph.num_nodes, order, out)
    return [bool(x) for x in out]


def link_removal_profile(graph: Graph, removal_order) -> list:
    """Disconnection flags for j = 0..L removed links, nodes always present."""
    order = list(removal_order)
    if sorted(order) != list(range(graph.num_links)):
        raise ValueError("removal order must be a permutation of all link ids")
    out = [0] * (graph.num_links + 1)
    _link_disconnection_into(graph.edges(), graph.num_nodes, graph.num_links, order, out)
    return [bool(x) for x in out]


# worker-side state, set once per process by the pool initializer
_WORK = {}


def _init_worker(kind, payload, n, l, seed):
    _WORK["kind"] = kind
    _WORK["payload"] = payload
    _WORK["n"] = n
    _WORK["l"] = l
    _WORK["seed"] = seed


def _count_range(bounds):
    start, stop = bounds
    kind = _WORK["kind"]
    n, l, seed = _WORK["n"], _WORK["l"], _WORK["seed"]
    payload = _WORK["payload"]
    if kind == "node":
        out = [0] * (n + 1)
        for r in range(start, stop):
            _node_disconnection_into(payload, n, _permutation(n, mix_seed(seed, r)), out)
    else:
        out = [0] * (l + 1)
        for r in range(start, stop):
            _link_disconnection_into(payload, n, l, _permutation(l, mix_seed(seed, r)), out)
    return out


def _accumulate(kind, payload, n, l, seed, runs, workers):
    w = resolve_workers(workers)
    if w <= 1 or runs < 4 * w:
        _init_worker(kind, payload, n, l, seed)
        try:
            return _count_range((0, runs))
        finally:
            _WORK.clear()
    chunks = []
    step = max(1, runs // (w * 4))
    at = 0
    while at < runs:
        chunks.append((at, min(at + step, runs)))
        at += step
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(w, initializer=_init_worker, initargs=(kind, payload, n, l, seed)) as pool:
        partials = pool.map(_count_range, chunks)
    total = [0] * len(partials[0])
    for part in partials:
        for j, c in enumerate(part):
            total[j] += c
    return total


def estimate_node_cut_fractions(
    graph: Graph, runs: int, seed: int, workers: int | None = None
) -> CutFractionEstimate:
    """Estimate the node cut fractions c_j over `runs` random removal orders."""
    if graph.num_nodes < 1:
        raise ValueError("graph must have at least one node")
    if runs < 1:
        raise ValueError("runs must be positive")
    counts = _accumulate("node", graph.adjacency, graph.num_nodes, None, seed, runs, workers)
    return CutFractionEstimate("node", graph.num_nodes, tuple(counts), runs, seed)


def estimate_link_cut_fractions(
    graph: Graph, runs: int, seed: int, workers: int | None = None
) -> CutFractionEstimate:
    """Estimate the link cut fractions over `runs` random link removal orders."""
    if graph.num_links < 1:
        raise ValueError("graph must have at least one link")
    if runs < 1:
        raise ValueError("runs must be positive")
    counts = _accumulate(
        "link", graph.edges(), graph.num_nodes, graph.num_links, seed, runs, workers
    )
    return CutFractionEstimate("link", graph.num_links, tuple(counts), runs, seed)


# ---------------------------------------------------------------------------
# curves from estimated (or exact) fractions


_log = logging.getLogger(__name__)


def _estimate_curve_values(est: CutFractionEstimate, grid):
    # evaluate 1 - sum_j C(n,j) c_j p^(n-j) (1-p)^j as the complement mixture
    # sum_j C(n,j) (1-c_j) p^(n-j) (1-p)^j: summing nonnegative terms avoids
    # the cancellation dirt that x^p would otherwise blow up near zero
    rev_survive = tuple(1.0 - c for c in est.fractions)[::-1]
    raw = [bernstein_mixture(rev_survive, p) for p in grid]
    values = tuple(_clamp01(v) for v in raw)
    if any(r != v for r, v in zip(raw, values)):
        _log.debug("clamped curve values; raw range [%.17g, %.17g]", min(raw), max(raw))
    return values


def node_reliability_curve(est: CutFractionEstimate, grid) -> Curve:
    """1 - sum_j C(N,j) c_j p^(N-j) (1-p)^j on the grid, clamped to [0, 1]."""
    if est.kind != "node":
        raise ValueError("node-kind estimate required")
    values = _estimate_curve_values(est, grid)
    meta = {"method": "mc", "kind": "node", "runs": est.runs, "seed": est.seed}
    return Curve(tuple(grid), values, meta)


def link_reliability_curve(est: CutFractionEstimate, grid) -> Curve:
    if est.kind != "link":
        raise ValueError("link-kind estimate required")
    values = _estimate_curve_values(est, grid)
    meta = {"method": "mc", "kind": "link", "runs": est.runs, "seed": est.seed}
    return Curve(tuple(grid), values, meta)


def estimate_link_reliability_curve(
    graph: Graph, runs: int, seed: int, grid, workers: int | None = None
) -> Curve:
    """Convenience: estimate link cut fractions, then evaluate their curve."""
    return link_reliability_curve(
        estimate_link_cut_fractions(graph, runs, seed, workers), grid
    )


# ---------------------------------------------------------------------------
# Laplace concentration estimate


def _cut_fraction_vector(source):
    if isinstance(source, CutFractionEstimate):
        if source.kind != "node":
            raise ValueError("node-kind fractions required")
        return source.fractions, source.dimension
    if isinstance(source, ReliabilityCoefficients):
        if source.kind != "node":
            raise ValueError("node-kind coefficients required")
        return source.cut_fractions, source.num_nodes
    vec = tuple(float(x) for x in source)
    return vec, len(vec) - 1


def _interp(vec, x: float) -> float:
    if x <= 0:
        return vec[0]
    lo = int(x)
    if lo >= len(vec) - 1:
        return vec[-1]
    frac = x - lo
    return (1.0 - frac) * vec[lo] + frac * vec[lo + 1]


def laplace_estimate(source, p: float, basis: str = "c") -> float:
    """Concentration-point estimate of the node reliability at p.

    basis "s": interpolate the connected fractions at index N*p.
    basis "c": 1 minus the cut fractions interpolated at index N*(1-p).
    The two agree whenever the fractions come from the same coefficients.
    Non-integer indices are linearly interpolated.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    cvec, n = _cut_fraction_vector(source)
    if basis == "c":
        return _clamp01(1.0 - _interp(cvec, n * (1.0 - p)))
    if basis == "s":
        svec = tuple(1.0 - cvec[n - k] for k in range(n + 1))
        return _clamp01(_interp(svec, n * p))
    raise ValueError('basis must be "s" or "c"')


def laplace_curve(source, grid, basis: str = "c") -> Curve:
    values = tuple(laplace_estimate(source, p, basis) for p in grid)
    runs = source.runs if isinstance(source, CutFractionEstimate) else None
    seed = source.seed if isinstance(source, CutFractionEstimate) else None
    return Curve(
        tuple(grid),
        values,
        {"method": "laplace", "kind": "node", "runs": runs, "seed": seed},
    )

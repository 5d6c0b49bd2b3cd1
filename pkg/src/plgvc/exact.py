"""Exact minimum vertex cover for desk-scale graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import SimpleGraph
from .lp_half import solve_half_integral
from .rounding import round_cover

DEFAULT_BUDGET = 10 ** 7
BRUTE_VC_MAX_N = 20


@dataclass(frozen=True)
class ExactResult:
    opt_size: int
    cover: frozenset[int]
    nodes_explored: int
    timed_out: bool


class _Budget(Exception):
    pass


def _lp_bound(adj: dict[int, set[int]]) -> int:
    verts = sorted(v for v, a in adj.items() if a)
    index = {v: i for i, v in enumerate(verts)}
    sub = SimpleGraph(len(verts), tuple(tuple(sorted(index[w] for w in adj[v])) for v in verts))
    return math.ceil(solve_half_integral(sub).cost_halves / 2)


def _take(adj: dict[int, set[int]], v: int) -> None:
    for w in adj.pop(v):
        adj[w].discard(v)


def exact_vc(g: SimpleGraph, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Branch and bound with degree-0/degree-1/loop reductions and an LP bound.

    Branches on the highest-degree vertex (lowest index on ties): either it is
    in the cover or all of its neighbours are. When more than ``budget`` search
    nodes are needed the best cover found so far is returned with
    ``timed_out=True``.
    """
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    forced = set(g.loops)
    for v in sorted(forced):
        _take(adj, v)

    # incumbent from the LP rounding
    x = solve_half_integral(g)
    y = round_cover(g, x)
    best = [frozenset(v for v in range(g.n) if y.y[v])]
    nodes = [0]

    def search(adj: dict[int, set[int]], chosen: frozenset[int]) -> None:
        nodes[0] += 1
        if nodes[0] > budget:
            raise _Budget
        adj = {v: set(a) for v, a in adj.items()}
        chosen = set(chosen)
        changed = True
        while changed:
            changed = False
            for v in sorted(adj):
                if v not in adj:
                    continue
                if not adj[v]:
                    del adj[v]
                elif len(adj[v]) == 1:
                    (u,) = adj[v]
                    chosen.add(u)
                    _take(adj, u)
                    changed = True
        if len(chosen) >= len(best[0]):
            return
        if not adj:
            best[0] = frozenset(chosen)
            return
        if len(chosen) + _lp_bound(adj) >= len(best[0]):
            return
        v = max(sorted(adj), key=lambda k: len(adj[k]))
        left = {k: set(a) for k, a in adj.items()}
        _take(left, v)
        search(left, frozenset(chosen | {v}))
        right = {k: set(a) for k, a in adj.items()}
        nbrs = sorted(right[v])
        for w in nbrs:
            _take(right, w)
        search(right, frozenset(chosen | set(nbrs)))

    timed_out = False
    try:
        search(adj, frozenset(forced))
    except _Budget:
        timed_out = True
    cover = best[0]
    return ExactResult(len(cover), cover, min(nodes[0], budget), timed_out)


def brute_vc(g: SimpleGraph) -> int:
    """Minimum cover size over all ``2^n`` vertex subsets (test oracle)."""
    n = g.n
    if n > BRUTE_VC_MAX_N:
        raise ValueError(f"brute_vc supports n <= {BRUTE_VC_MAX_N}, got {n}")
    masks = np.arange(1 << n, dtype=np.uint32)
    ok = np.ones(masks.size, dtype=bool)
    for u, v in g.edges():
        ok &= (((masks >> u) | (masks >> v)) & 1).astype(bool)
    for v in g.loops:
        ok &= ((masks >> v) & 1).astype(bool)
    return int(np.bitwise_count(masks[ok]).min())

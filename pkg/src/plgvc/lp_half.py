"""Optimal half-integral vertex-cover LP solutions via bipartite matching.

Every vertex ``v`` gets a left copy ``v_L`` and a right copy ``v_R``; a simple
edge ``{u, v}`` becomes ``(u_L, v_R)`` and ``(v_L, u_R)``, a loop on ``v``
becomes ``(v_L, v_R)``. A minimum vertex cover ``C`` of this bipartite graph
(König, from a maximum matching) gives the LP optimum
``x(v) = ([v_L in C] + [v_R in C]) / 2``.

Values are kept in half-units (0, 1, 2) so all arithmetic stays integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .graph import SimpleGraph

BRUTE_LP_MAX_N = 14


class InfeasibleAssignment(ValueError):
    pass


@dataclass(frozen=True)
class HalfAssignment:
    """Per-vertex LP value in half-units: 0, 1, 2 mean 0, 1/2, 1."""

    halves: tuple[int, ...]

    @property
    def cost_halves(self) -> int:
        return sum(self.halves)

    @property
    def cost(self) -> Fraction:
        return Fraction(self.cost_halves, 2)

    def __len__(self):
        return len(self.halves)

    def values(self) -> list[float]:
        return [h / 2 for h in self.halves]


@dataclass(frozen=True)
class NtPartition:
    P: tuple[int, ...]
    Q: tuple[int, ...]
    R: tuple[int, ...]


def hopcroft_karp(n_left: int, n_right: int, adj: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    """Maximum bipartite matching. Returns ``(match_left, match_right)``, -1 = free.

    Left vertices are scanned in ascending order and their neighbour lists in
    the given order, so the result is deterministic.
    """
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    for u in range(n_left):
        for v in adj[u]:
            if match_r[v] < 0:
                match_l[u] = v
                match_r[v] = u
                break

    while True:
        dist = [-1] * n_left
        queue = [u for u in range(n_left) if match_l[u] < 0]
        for u in queue:
            dist[u] = 0
        found = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for v in adj[u]:
                w = match_r[v]
                if w < 0:
                    found = True
                elif dist[w] < 0:
                    dist[w] = du
                    queue.append(w)
        if not found:
            return match_l, match_r

        pos = [0] * n_left
        for s in range(n_left):
            if match_l[s] >= 0:
                continue
            stack = [s]
            via: list[int] = []
            while stack:
                u = stack[-1]
                nbrs = adj[u]
                k = pos[u]
                moved = False
                while k < len(nbrs):
                    v = nbrs[k]
                    k += 1
                    w = match_r[v]
                    if w < 0:
                        pos[u] = k
                        via.append(v)
                        for a, b in zip(stack, via):
                            match_l[a] = b
                            match_r[b] = a
                        stack = []
                        moved = True
                        break
                    if dist[w] == dist[u] + 1:
                        pos[u] = k
                        via.append(v)
                        stack.append(w)
                        moved = True
                        break
                if not moved:
                    pos[u] = k
                    dist[u] = -2  # dead end for the rest of this phase
                    stack.pop()
                    if via:
                        via.pop()


def konig_cover(adj: Sequence[Sequence[int]], match_l: list[int], match_r: list[int]) -> tuple[list[bool], list[bool]]:
    """Minimum vertex cover from a maximum matching by alternating reachability.

    Returns membership flags ``(left_in_cover, right_in_cover)``.
    """
    seen_l = [False] * len(match_l)
    seen_r = [False] * len(match_r)
    queue = [u for u in range(len(match_l)) if match_l[u] < 0]
    for u in queue:
        seen_l[u] = True
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in adj[u]:
            if seen_r[v]:
                continue
            seen_r[v] = True
            w = match_r[v]
            if w >= 0 and not seen_l[w]:
                seen_l[w] = True
                queue.append(w)
    return [not s for s in seen_l], seen_r


def doubled_adjacency(g: SimpleGraph) -> list[list[int]]:
    adj = [list(a) for a in g.adj]
    for v in g.loops:
        adj[v].append(v)
        adj[v].sort()
    return adj


def solve_half_integral(g: SimpleGraph) -> HalfAssignment:
    """LP-optimal half-integral vertex-cover assignment for ``g``."""
    adj = doubled_adjacency(g)
    match_l, match_r = hopcroft_karp(g.n, g.n, adj)
    in_l, in_r = konig_cover(adj, match_l, match_r)
    return HalfAssignment(tuple(int(a) + int(b) for a, b in zip(in_l, in_r)))


def doubled_matching_size(g: SimpleGraph) -> int:
    match_l, _ = hopcroft_karp(g.n, g.n, doubled_adjacency(g))
    return sum(1 for v in match_l if v >= 0)


def is_feasible(g: SimpleGraph, halves: Sequence[int]) -> bool:
    if len(halves) != g.n or any(h not in (0, 1, 2) for h in halves):
        return False
    if any(halves[v] < 1 for v in g.loops):
        return False
    return all(halves[u] + halves[v] >= 2 for u in range(g.n) for v in g.adj[u] if u < v)


def _coerce(x) -> tuple[int, ...]:
    return tuple(x.halves) if isinstance(x, HalfAssignment) else tuple(x)


def nt_partition(x, g: Optional[SimpleGraph] = None) -> NtPartition:
    """Split vertices by LP value into ``P`` (1), ``Q`` (1/2) and ``R`` (0)."""
    halves = _coerce(x)
    if any(h not in (0, 1, 2) for h in halves):
        raise InfeasibleAssignment("values must be half-integral in [0, 1]")
    if g is not None and not is_feasible(g, halves):
        raise InfeasibleAssignment("assignment violates an edge or loop constraint")
    parts: dict[int, list[int]] = {0: [], 1: [], 2: []}
    for v, h in enumerate(halves):
        parts[h].append(v)
    return NtPartition(tuple(parts[2]), tuple(parts[1]), tuple(parts[0]))


def two_approx_cover(x) -> list[int]:
    """Round every positive LP value up."""
    return [1 if h >= 1 else 0 for h in _coerce(x)]


_TABLES: dict[int, np.ndarray] = {}


def _assignment_table(k: int) -> np.ndarray:
    if k not in _TABLES:
        _TABLES[k] = np.array(list(product((0, 1, 2), repeat=k)), dtype=np.int8).reshape(-1, k)
    return _TABLES[k]


def brute_half_lp(g: SimpleGraph) -> HalfAssignment:
    """Exhaustive minimum over all ``{0,1,2}^n`` assignments (test oracle).

    Enumerates in lexicographic order and returns the first minimiser.
    """
    n = g.n
    if n > BRUTE_LP_MAX_N:
        raise ValueError(f"brute_half_lp supports n <= {BRUTE_LP_MAX_N}, got {n}")
    if n == 0:
        return HalfAssignment(())
    edges = g.edges()
    loops = sorted(g.loops)
    # fix the leading vertices per chunk to cap memory
    head = max(0, n - 10)
    tail = _assignment_table(n - head)
    best_cost, best = None, None
    for prefix in product((0, 1, 2), repeat=head):
        full = np.empty((tail.shape[0], n), dtype=np.int8)
        full[:, :head] = prefix
        full[:, head:] = tail
        ok = np.ones(tail.shape[0], dtype=bool)
        for u, v in edges:
            ok &= (full[:, u] + full[:, v]) >= 2
        for v in loops:
            ok &= full[:, v] >= 1
        if not ok.any():
            continue
        costs = np.where(ok, full.sum(axis=1, dtype=np.int64), np.iinfo(np.int64).max)
        i = int(np.argmin(costs))
        if best_cost is None or costs[i] < best_cost:
            best_cost, best = int(costs[i]), tuple(int(h) for h in full[i])
    return HalfAssignment(best)

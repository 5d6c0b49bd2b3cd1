"""Multigraph and simple-graph containers, cover validation and the text format.

The random model produces multigraphs (loops and parallel edges kept). Every
cover-related computation runs on the :class:`SimpleGraph` obtained by
:func:`simplify`, where loops survive only as a set of vertices that any cover
must contain.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Raised when a graph file does not follow the ``p``/``e`` line format."""


@dataclass(frozen=True, eq=False)
class MultiGraph:
    """Undirected multigraph with self-loops.

    ``edges`` is an ``(m, 2)`` integer array with ``edges[k, 0] <= edges[k, 1]``;
    duplicate rows are parallel edges and rows with equal endpoints are loops.
    """

    n: int
    edges: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= self.n):
            raise ValueError(f"edge endpoint outside [0, {self.n})")
        e = np.sort(e, axis=1)
        e.setflags(write=False)
        object.__setattr__(self, "edges", e)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> "MultiGraph":
        return cls(n, np.array(list(pairs), dtype=np.int64).reshape(-1, 2))

    @property
    def m(self) -> int:
        return int(self.edges.shape[0])

    def degrees(self) -> np.ndarray:
        """Multigraph degrees; a loop adds 2 to its vertex."""
        deg = np.bincount(self.edges[:, 0], minlength=self.n)
        deg += np.bincount(self.edges[:, 1], minlength=self.n)
        return deg

    def degree(self, v: int) -> int:
        e = self.edges
        return int(np.count_nonzero(e[:, 0] == v) + np.count_nonzero(e[:, 1] == v))

    def sorted_edges(self) -> np.ndarray:
        if not self.m:
            return self.edges
        order = np.lexsort((self.edges[:, 1], self.edges[:, 0]))
        return self.edges[order]

    def same_edges(self, other: "MultiGraph") -> bool:
        return self.n == other.n and np.array_equal(self.sorted_edges(), other.sorted_edges())

    def __eq__(self, other):
        return isinstance(other, MultiGraph) and self.same_edges(other)

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Loop-free graph without parallel edges plus the vertices that had loops."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    loops: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], loops: Iterable[int] = ()) -> "SimpleGraph":
        """Build from ``(u, v)`` pairs; self-pairs are moved into ``loops``."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        loop_set = set(loops)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside [0, {n})")
            if u == v:
                loop_set.add(u)
            else:
                nbrs[u].add(v)
                nbrs[v].add(u)
        if any(not 0 <= v < n for v in loop_set):
            raise ValueError("loop vertex outside vertex range")
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), frozenset(loop_set))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def induced(self, vertices: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        """Subgraph induced by ``vertices``, relabelled 0..k-1 in ascending order.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(tuple(index[w] for w in self.adj[v] if w in index) for v in keep)
        loops = frozenset(index[v] for v in self.loops if v in index)
        return SimpleGraph(len(keep), adj, loops), keep

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.adj == other.adj
            and self.loops == other.loops
        )

    def __hash__(self):
        return hash((self.n, self.adj, self.loops))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m}, loops={len(self.loops)})"


def simplify(g: MultiGraph) -> SimpleGraph:
    """Collapse parallel edges and strip loops, remembering the loop vertices."""
    e = g.edges
    is_loop = e[:, 0] == e[:, 1]
    loops = frozenset(int(v) for v in np.unique(e[is_loop, 0]))
    rest = e[~is_loop]
    if rest.shape[0] == 0:
        return SimpleGraph(g.n, tuple(() for _ in range(g.n)), loops)
    # both orientations, deduplicated and sorted by (source, target)
    both = np.unique(np.concatenate([rest, rest[:, ::-1]]), axis=0)
    starts = np.searchsorted(both[:, 0], np.arange(g.n + 1))
    targets = both[:, 1].tolist()
    adj = tuple(tuple(targets[starts[v]:starts[v + 1]]) for v in range(g.n))
    return SimpleGraph(g.n, adj, loops)


def edge_census(g: MultiGraph) -> dict[str, int]:
    """Counts of loop edges, surplus parallel copies and distinct simple edges."""
    e = g.edges
    is_loop = e[:, 0] == e[:, 1]
    rest = e[~is_loop]
    simple = int(np.unique(rest, axis=0).shape[0]) if rest.shape[0] else 0
    loops = int(np.count_nonzero(is_loop))
    return {"m_multi": g.m, "m_simple": simple, "loops": loops, "parallels": int(rest.shape[0]) - simple}


def validate_cover(g: SimpleGraph, y: Sequence[int]) -> bool:
    """True iff ``y`` (0/1 per vertex) covers every edge and every loop vertex."""
    if len(y) != g.n:
        raise ValueError(f"assignment has {len(y)} entries, graph has {g.n} vertices")
    for v in g.loops:
        if not y[v]:
            return False
    for u, nbrs in enumerate(g.adj):
        if y[u]:
            continue
        for w in nbrs:
            if not y[w]:
                return False
    return True


def induced_degree_stats(g: SimpleGraph) -> dict[int, int]:
    """Histogram ``degree -> vertex count`` of the simple graph, sorted by degree."""
    return dict(sorted(Counter(len(a) for a in g.adj).items()))


def format_graph(g: MultiGraph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges().tolist())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> MultiGraph:
    n = m = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p" and len(parts) == 3 and n is None:
                n, m = int(parts[1]), int(parts[2])
            elif parts[0] == "e" and len(parts) == 3 and n is not None:
                pairs.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphFormatError(f"line {lineno}: unexpected {line!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(pairs) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return MultiGraph.from_pairs(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def write_graph(g: MultiGraph, path) -> None:
    Path(path).write_text(format_graph(g))


def read_graph(path) -> MultiGraph:
    return parse_graph(Path(path).read_text())

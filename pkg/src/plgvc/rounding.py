"""Deterministic rounding of a half-integral LP optimum to a vertex cover.

The rounding treats degree-1 vertices and degree-2 vertices with LP value 1/2
(the set ``L``) specially, so that on ``V*`` (degree-1/2 vertices and their
neighbours) the cover costs at most 3/2 of the LP value; everywhere else it is
plain round-up.

Degrees are those of the simplified graph. A vertex that carried a self-loop
must be in every cover, so it is never classified as low degree: it counts as
a high-degree vertex whatever its simple degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import SimpleGraph, validate_cover
from .lp_half import HalfAssignment, InfeasibleAssignment, is_feasible

HALF = 1  # half-units


class RoundingInvariantError(AssertionError):
    """An internal invariant of the rounding procedure was violated."""


@dataclass(frozen=True)
class CoverAssignment:
    y: tuple[int, ...]

    @property
    def cost(self) -> int:
        return sum(self.y)

    def __len__(self):
        return len(self.y)

    def __getitem__(self, v):
        return self.y[v]


@dataclass(frozen=True)
class RoundingContext:
    L: frozenset[int]
    v_prime: frozenset[int]
    v_star: frozenset[int]
    processed: tuple[bool, ...]
    step_of: tuple[Optional[int], ...]  # step that first assigned each vertex, None if step 5


def _low(g: SimpleGraph) -> list[bool]:
    return [len(a) in (1, 2) and v not in g.loops for v, a in enumerate(g.adj)]


def _high(g: SimpleGraph) -> list[bool]:
    return [len(a) >= 3 or v in g.loops for v, a in enumerate(g.adj)]


def compute_vstar(g: SimpleGraph) -> frozenset[int]:
    """Degree-1 and degree-2 vertices together with their neighbours."""
    out: set[int] = set()
    for v, low in enumerate(_low(g)):
        if low:
            out.add(v)
            out.update(g.adj[v])
    return frozenset(out)


def compute_l(g: SimpleGraph, x: HalfAssignment) -> frozenset[int]:
    low = _low(g)
    return frozenset(
        v for v in range(g.n)
        if low[v] and (len(g.adj[v]) == 1 or x.halves[v] == HALF)
    )


def compute_vprime(g: SimpleGraph, x: HalfAssignment) -> frozenset[int]:
    L = compute_l(g, x)
    out = set(L)
    for v in L:
        out.update(g.adj[v])
    return frozenset(out)


def round_cover(g: SimpleGraph, x: HalfAssignment, with_context: bool = False):
    """Round an LP-optimal half-integral ``x`` to an integral cover.

    Returns a :class:`CoverAssignment`, or ``(cover, RoundingContext)`` when
    ``with_context`` is set. Raises :class:`InfeasibleAssignment` if ``x`` is
    not a feasible half-integral assignment for ``g``.
    """
    halves = x.halves
    if not is_feasible(g, halves):
        raise InfeasibleAssignment("x is not a feasible half-integral assignment for g")
    n, adj = g.n, g.adj
    low, high = _low(g), _high(g)
    deg2_half = [low[v] and len(adj[v]) == 2 and halves[v] == HALF for v in range(n)]

    y: list[Optional[int]] = [None] * n
    processed = [False] * n
    step_of: list[Optional[int]] = [None] * n

    def assign(v, value, step):
        y[v] = value
        if not processed[v]:
            processed[v] = True
            step_of[v] = step

    # step 1: degree-1 vertices
    for v in range(n):
        if low[v] and len(adj[v]) == 1 and not processed[v]:
            (u,) = adj[v]
            assign(v, 0, 1)
            assign(u, 1, 1)

    # step 2: paths u - v1 - v2 - w with deg(u) >= 3 and v1, v2 in L
    for v1 in range(n):
        if processed[v1] or not deg2_half[v1]:
            continue
        a, b = adj[v1]
        for u, v2 in ((a, b), (b, a)):
            if high[u] and not processed[u] and deg2_half[v2] and not processed[v2]:
                p, q = adj[v2]
                w = q if p == v1 else p
                if processed[w] and y[w] != 1:
                    raise RoundingInvariantError(f"step 2: processed end {w} has y=0")
                assign(u, 1, 2)
                assign(w, 1, 2)
                assign(v1, 1, 2)
                assign(v2, 0, 2)
                break

    # steps 3 and 4: degree-2 vertices in L, first those next to a high-degree vertex
    def settle(v, step):
        for nb in adj[v]:
            if processed[nb]:
                if y[nb] != 1:
                    raise RoundingInvariantError(f"step {step}: processed neighbour {nb} of {v} has y=0")
            else:
                assign(nb, 1, step)
        assign(v, 0, step)

    for v in range(n):
        if deg2_half[v] and not processed[v] and any(high[nb] for nb in adj[v]):
            settle(v, 3)
    for v in range(n):
        if deg2_half[v] and not processed[v]:
            settle(v, 4)

    # step 5: round up what is left; loop vertices are always covered
    for v in range(n):
        if not processed[v]:
            y[v] = 1 if halves[v] >= HALF else 0
    for v in g.loops:
        y[v] = 1

    cover = CoverAssignment(tuple(y))
    if not with_context:
        return cover
    L = compute_l(g, x)
    vprime = set(L)
    for v in L:
        vprime.update(adj[v])
    ctx = RoundingContext(L, frozenset(vprime), compute_vstar(g), tuple(processed), tuple(step_of))
    return cover, ctx


def vstar_lower_bound_witness(g: SimpleGraph) -> int:
    """Number of high-degree vertices adjacent to some degree-1 or degree-2 vertex.

    Any optimal LP solution has ``x(V*)`` at least half this count.
    """
    low, high = _low(g), _high(g)
    return sum(1 for u in range(g.n) if high[u] and any(low[v] for v in g.adj[u]))


@dataclass(frozen=True)
class RatioDecomposition:
    """Cover cost against LP cost on ``V*`` and on the rest, exact fractions.

    Ratios whose denominator is zero are ``None``.
    """

    y_vstar: int
    y_rest: int
    x_vstar_halves: int
    x_rest_halves: int
    r_vstar: Optional[Fraction]
    r_rest: Optional[Fraction]
    r_composite: Optional[Fraction]


def _ratio(num: int, den_halves: int) -> Optional[Fraction]:
    return Fraction(2 * num, den_halves) if den_halves else None


def ratio_decomposition(g: SimpleGraph, x: HalfAssignment, y: CoverAssignment,
                        vstar: Optional[frozenset[int]] = None) -> RatioDecomposition:
    vstar = compute_vstar(g) if vstar is None else vstar
    y_vs = sum(y.y[v] for v in vstar)
    x_vs = sum(x.halves[v] for v in vstar)
    y_rest = y.cost - y_vs
    x_rest = x.cost_halves - x_vs
    total = x_vs + x_rest
    composite = (Fraction(x_vs, total) * Fraction(3, 2) + Fraction(x_rest, total) * 2) if total else None
    return RatioDecomposition(y_vs, y_rest, x_vs, x_rest, _ratio(y_vs, x_vs), _ratio(y_rest, x_rest), composite)


@dataclass(frozen=True)
class GuaranteeCheck:
    valid_cover: bool
    high_degree_covered: bool   # every degree>=3 vertex of V' has y = 1
    vstar_three_halves: bool    # y(V*) <= 3/2 x(V*)
    rest_pointwise: bool        # y(v) <= 2 x(v) outside V*
    global_two: bool            # y(V) <= 2 x(V)

    @property
    def all(self) -> bool:
        return (self.valid_cover and self.high_degree_covered and self.vstar_three_halves
                and self.rest_pointwise and self.global_two)


def check_guarantees(g: SimpleGraph, x: HalfAssignment, y: CoverAssignment) -> GuaranteeCheck:
    """Evaluate the rounding guarantees in exact half-unit arithmetic."""
    high = _high(g)
    vprime = compute_vprime(g, x)
    vstar = compute_vstar(g)
    y_vs = sum(y.y[v] for v in vstar)
    x_vs = sum(x.halves[v] for v in vstar)
    return GuaranteeCheck(
        valid_cover=validate_cover(g, y.y),
        high_degree_covered=all(y.y[u] == 1 for u in vprime if high[u]),
        vstar_three_halves=4 * y_vs <= 3 * x_vs,
        rest_pointwise=all(y.y[v] <= x.halves[v] for v in range(g.n) if v not in vstar),
        global_two=y.cost <= x.cost_halves,
    )

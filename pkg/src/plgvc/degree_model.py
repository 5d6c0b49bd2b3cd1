"""Degree sequences of the (alpha, beta) power-law model."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bounds import DEFAULT_EPS, zeta

# relative slack for float quotients that should land exactly on an integer
_FLOOR_SLACK = 1e-12


class InvalidParameters(ValueError):
    pass


def _floor(q: float) -> int:
    return math.floor(q * (1 + _FLOOR_SLACK))


@dataclass(frozen=True)
class PlgParams:
    """Model parameters. ``scale`` is ``e**alpha`` and is the value used for counts."""

    alpha: float
    beta: float
    scale: float = field(default=None)

    def __post_init__(self):
        if not self.beta > 2:
            raise InvalidParameters(f"beta must exceed 2, got {self.beta}")
        if self.scale is None:
            object.__setattr__(self, "scale", math.exp(self.alpha))
        if not self.scale > 0:
            raise InvalidParameters("e^alpha must be positive")
        if self.max_degree < 1:
            raise InvalidParameters(f"alpha={self.alpha} gives maximum degree < 1")

    @classmethod
    def from_scale(cls, scale: float, beta: float) -> "PlgParams":
        """Parameters with ``e**alpha`` given directly."""
        if not scale > 0:
            raise InvalidParameters("e^alpha must be positive")
        return cls(alpha=math.log(scale), beta=beta, scale=float(scale))

    @property
    def max_degree(self) -> int:
        """``floor(e^(alpha/beta))``, i.e. the largest ``d`` with ``d^beta <= e^alpha``."""
        d = _floor(self.scale ** (1 / self.beta))
        while d > 0 and d ** self.beta > self.scale * (1 + _FLOOR_SLACK):
            d -= 1
        while (d + 1) ** self.beta <= self.scale * (1 + _FLOOR_SLACK):
            d += 1
        return d


@dataclass(frozen=True)
class DegreeSequence:
    """``counts[i-1]`` vertices of degree ``i`` for ``i = 1..len(counts)``."""

    counts: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return len(self.counts)

    @property
    def total_vertices(self) -> int:
        return sum(self.counts)

    @property
    def total_degree(self) -> int:
        return sum(i * y for i, y in enumerate(self.counts, 1))

    def vertex_degrees(self) -> list[int]:
        """Target degree per vertex, vertex ids assigned class by class from degree 1."""
        out: list[int] = []
        for i, y in enumerate(self.counts, 1):
            out.extend([i] * y)
        return out


def build_degree_sequence(p: PlgParams) -> DegreeSequence:
    """``y_i = floor(e^alpha / i^beta)``; ``y_1`` gains one vertex if the degree sum is odd."""
    counts = [_floor(p.scale / i ** p.beta) for i in range(1, p.max_degree + 1)]
    if sum(i * y for i, y in enumerate(counts, 1)) % 2:
        counts[0] += 1
    return DegreeSequence(tuple(counts))


def expected_counts(p: PlgParams, eps: float = DEFAULT_EPS) -> tuple[float, float]:
    """Asymptotic vertex and edge counts ``(zeta(b) e^a, zeta(b-1) e^a / 2)``."""
    return zeta(p.beta, eps) * p.scale, 0.5 * zeta(p.beta - 1, eps) * p.scale

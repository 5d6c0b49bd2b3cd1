"""Sampling from the random-matching model.

Each vertex of target degree ``d`` contributes ``d`` copies, laid out
vertex-major. The copy list is shuffled with numpy's PCG64 generator seeded by
the 64-bit seed (Fisher-Yates, so every permutation is equally likely) and
consecutive entries are paired, which is a uniform random perfect matching.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .degree_model import DegreeSequence, PlgParams, build_degree_sequence
from .graph import MultiGraph

SEED_MAX = 2 ** 64 - 1


class InvalidInput(ValueError):
    pass


def _rng(seed: int) -> np.random.Generator:
    if not 0 <= int(seed) <= SEED_MAX:
        raise InvalidInput(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(int(seed)))


def generate(seq: DegreeSequence, seed: int) -> MultiGraph:
    if seq.total_degree % 2:
        raise InvalidInput(f"total degree {seq.total_degree} is odd; no perfect matching exists")
    degrees = np.asarray(seq.vertex_degrees(), dtype=np.int64)
    copies = np.repeat(np.arange(degrees.size, dtype=np.int64), degrees)
    _rng(seed).shuffle(copies)
    return MultiGraph(int(degrees.size), copies.reshape(-1, 2))


def generate_batch(p: PlgParams, seeds: Iterable[int]) -> list[MultiGraph]:
    seq = build_degree_sequence(p)
    return [generate(seq, s) for s in seeds]

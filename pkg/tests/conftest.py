import random

import pytest

from plgvc.graph import SimpleGraph


def path(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return SimpleGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves):
    return SimpleGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_edges(10, outer + spokes + inner)


NAMED = {
    "K2": complete(2),
    "P3": path(3),
    "P4": path(4),
    "C4": cycle(4),
    "C5": cycle(5),
    "C6": cycle(6),
    "K4": complete(4),
    "petersen": petersen(),
    "star3": star(3),
    "star5": star(5),
}


def random_graph(rng: random.Random, n_max=12, loop_p=0.0):
    n = rng.randint(1, n_max)
    p = rng.choice([0.1, 0.2, 0.35, 0.5, 0.8])
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    loops = [v for v in range(n) if rng.random() < loop_p]
    return SimpleGraph.from_edges(n, edges, loops)


@pytest.fixture(params=sorted(NAMED))
def named_graph(request):
    return NAMED[request.param]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)

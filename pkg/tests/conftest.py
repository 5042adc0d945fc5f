import itertools
import random

import pytest

from srdom import kernels
from srdom.graphs import Graph

ACCEPTANCE_RESULTS = {}


def naive_is_srdf(adjacency, labels):
    """Direct transcription of the two conditions, no shared code."""
    for v, nb in enumerate(adjacency):
        if labels[v] + sum(labels[u] for u in nb) < 1:
            return False
        if labels[v] == -1 and 2 not in [labels[u] for u in nb]:
            return False
    return True


def naive_optimum(g: Graph) -> int:
    return min(
        sum(f)
        for f in itertools.product((-1, 1, 2), repeat=g.vertex_count)
        if naive_is_srdf(g.adjacency, f)
    )


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@pytest.fixture(params=kernels.available_backends())
def impl(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[k])

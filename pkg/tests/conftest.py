import random

import pytest

from resolvability import from_edge_list
from resolvability.extremal import THEOREM_PAIRS, GraphSource, sweep


def random_connected_graph(rng, n_min=2, n_max=12):
    """Random connected graph: random tree plus random extra edges."""
    n = rng.randint(n_min, n_max)
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = rng.randint(0, len(possible) // 2)
    edges += rng.sample(possible, extra)
    return from_edge_list(n, edges)


def random_hitting_instance(rng, max_universe=16, max_sets=24):
    """Random instance with no empty sets."""
    n = rng.randint(2, max_universe)
    k = rng.randint(1, max_sets)
    sets = []
    for _ in range(k):
        size = rng.randint(1, max(1, n // 2))
        sets.append(sum(1 << v for v in rng.sample(range(n), size)))
    return n, tuple(sets)


@pytest.fixture(scope="session")
def theorem_sweeps():
    """Memoized exhaustive sweeps (all theorem pairs + pointwise laws)."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = sweep(
                GraphSource.enumeration(n), THEOREM_PAIRS, law_checks=True
            )
        return cache[n]

    return get

"""Shared fixtures: the bridge fixture network, two layered-search
fixtures, frozen golden tables, and random-instance helpers.

Golden values were derived with an exact-rational brute-force oracle
(integer state counter, union-find, submask crediting); every listed
reliability is an exact 5-decimal value, so float comparisons against
them are meaningful at tight tolerances.
"""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from multirel import Network, load_network, realize_subgraph

DATA_DIR = Path(__file__).parent / "data"
BRIDGE_PATH = DATA_DIR / "bridge.txt"

# bridge network, uniform arc reliability 0.9: R[label], label = sum 2^v
BRIDGE_P09_TABLE = (
    0.0, 0.0, 0.0, 0.98829,
    0.0, 0.98829, 0.99639, 0.98658,
    0.0, 0.97848, 0.98829, 0.97767,
    0.98829, 0.97767, 0.98658, 0.97686,
)

# bridge network with its heterogeneous reliabilities (0.9, 0.8, 0.7, 0.7, 0.8)
BRIDGE_MIXED_TABLE = (
    0.0, 0.0, 0.0, 0.96944,
    0.0, 0.95624, 0.96304, 0.94568,
    0.0, 0.90488, 0.91984, 0.89912,
    0.92824, 0.89732, 0.90808, 0.89156,
)

# size-stratified means of BRIDGE_P09_TABLE
BRIDGE_P09_AVERAGES = {2: 0.988005, 3: 0.982125, 4: 0.976860}


@pytest.fixture
def bridge_path() -> Path:
    return BRIDGE_PATH


@pytest.fixture
def bridge_mixed() -> Network:
    return load_network(str(BRIDGE_PATH))


@pytest.fixture
def bridge_p09() -> Network:
    return load_network(str(BRIDGE_PATH), uniform_p=0.9)


@pytest.fixture
def isolated_node_subgraph():
    """Five nodes, arcs 0-1, 0-2, 2-4 all active; node 3 isolated."""
    net = Network.from_arc_list(5, [(0, 1, 1.0), (0, 2, 1.0), (2, 4, 1.0)])
    return realize_subgraph(net, (1, 1, 1))


@pytest.fixture
def two_component_network() -> Network:
    """Eight nodes in two components: {0,1,2,4} and {3,5,6,7}."""
    return Network.from_arc_list(
        8,
        [(0, 1, 1.0), (0, 2, 1.0), (2, 4, 1.0),
         (3, 6, 1.0), (6, 5, 1.0), (5, 7, 1.0)],
    )


def random_network(
    rng: random.Random,
    max_nodes: int,
    max_arcs: int,
    p_low: float = 0.0,
    p_high: float = 1.0,
) -> Network:
    """Random simple network; isolated nodes can occur and are fine."""
    n = rng.randint(2, max_nodes)
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = rng.randint(1, min(max_arcs, len(all_pairs)))
    pairs = rng.sample(all_pairs, m)
    return Network.from_arc_list(
        n, [(u, v, rng.uniform(p_low, p_high)) for u, v in pairs]
    )


def random_connected_network(
    rng: random.Random, n: int, m: int, p_low: float, p_high: float
) -> Network:
    """Random spanning tree plus extra arcs, exactly m arcs total."""
    order = list(range(n))
    rng.shuffle(order)
    pairs = []
    for idx in range(1, n):
        pairs.append((order[rng.randrange(idx)], order[idx]))
    seen = {frozenset(p) for p in pairs}
    while len(pairs) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and frozenset((u, v)) not in seen:
            pairs.append((u, v))
            seen.add(frozenset((u, v)))
    return Network.from_arc_list(
        n, [(u, v, rng.uniform(p_low, p_high)) for u, v in pairs]
    )


def random_state(rng: random.Random, m: int) -> tuple[int, ...]:
    return tuple(rng.randint(0, 1) for _ in range(m))


def dsu_partition(node_count: int, pairs) -> set[frozenset[int]]:
    """Reference component partition by union-find, for differential tests."""
    parent = list(range(node_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, set[int]] = {}
    for v in range(node_count):
        groups.setdefault(find(v), set()).add(v)
    return {frozenset(g) for g in groups.values()}

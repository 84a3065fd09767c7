"""Independent ground-truth generators for differential testing.

Everything here recomputes reliability with algorithms deliberately
disjoint from the engine's: states come from a plain integer counter
rather than the addition-order stream, components from union-find rather
than layered search, and subset crediting from direct submask expansion
rather than the subset stream.  A Monte Carlo estimator and a closed-form
bridge formula give two further routes that share no exhaustive
enumeration at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable

import numpy as np

from .engine import ReliabilityTable
from .errors import GuardError, ValidationError
from .network import Network, network_fingerprint

BRUTE_MAX_NODES = 16
BRUTE_MAX_ARCS = 22

_MC_BLOCK = 1 << 16


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo estimate with its binomial standard error."""

    mean: float
    std_error: float
    samples: int
    seed: int


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def brute_force_table(network: Network) -> ReliabilityTable:
    """Reliability table by counter enumeration, union-find, and submask
    expansion; the trust anchor the engine is compared against."""
    n = network.node_count
    m = network.arc_count
    if n > BRUTE_MAX_NODES:
        raise GuardError(
            f"{n} nodes exceeds the brute-force guard ({BRUTE_MAX_NODES})"
        )
    if m > BRUTE_MAX_ARCS:
        raise GuardError(
            f"{m} arcs exceeds the brute-force guard ({BRUTE_MAX_ARCS})"
        )
    us = [a.u for a in network.arcs]
    vs = [a.v for a in network.arcs]
    ps = [a.reliability for a in network.arcs]
    qs = [1.0 - p for p in ps]
    entries = [0.0] * (1 << n)
    for code in range(1 << m):
        pr = 1.0
        parent = list(range(n))
        for i in range(m):
            if (code >> i) & 1:
                pr *= ps[i]
                ru = _find(parent, us[i])
                rv = _find(parent, vs[i])
                if ru != rv:
                    parent[ru] = rv
            else:
                pr *= qs[i]
        if pr == 0.0:
            continue
        comp_mask: dict[int, int] = {}
        for v in range(n):
            root = _find(parent, v)
            comp_mask[root] = comp_mask.get(root, 0) | (1 << v)
        for mask in comp_mask.values():
            if mask & (mask - 1):
                sub = mask
                while sub:
                    if sub & (sub - 1):
                        entries[sub] += pr
                    sub = (sub - 1) & mask
    return ReliabilityTable(tuple(entries), n, network_fingerprint(network))


def _subset_connected(
    code: int, us: list[int], vs: list[int], subset_nodes: tuple[int, ...],
    n: int,
) -> bool:
    parent = list(range(n))
    for i in range(len(us)):
        if (code >> i) & 1:
            ru = _find(parent, us[i])
            rv = _find(parent, vs[i])
            if ru != rv:
                parent[ru] = rv
    root = _find(parent, subset_nodes[0])
    return all(_find(parent, v) == root for v in subset_nodes[1:])


def _mc_block(
    network: Network,
    subset_nodes: tuple[int, ...],
    block_len: int,
    seed_seq: np.random.SeedSequence,
) -> int:
    """Successes among block_len samples drawn from one per-block stream."""
    m = network.arc_count
    n = network.node_count
    us = [a.u for a in network.arcs]
    vs = [a.v for a in network.arcs]
    probs = np.array([a.reliability for a in network.arcs])
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    draws = rng.random((block_len, m)) < probs
    powers = (1 << np.arange(m, dtype=np.int64))
    codes = (draws * powers).sum(axis=1)
    uniques, counts = np.unique(codes, return_counts=True)
    successes = 0
    for code, count in zip(uniques.tolist(), counts.tolist()):
        if _subset_connected(code, us, vs, subset_nodes, n):
            successes += count
    return successes


def monte_carlo_estimate(
    network: Network,
    subset: Iterable[int],
    samples: int,
    seed: int,
    workers: int = 1,
) -> McEstimate:
    """Estimate a subset's reliability from seeded random arc states.

    Samples are drawn in fixed-size blocks, each from its own stream
    spawned off the root seed, and tallied as integer success counts, so
    the estimate is byte-identical for a given seed regardless of worker
    count.
    """
    nodes = tuple(sorted(set(subset)))
    if len(nodes) < 2:
        raise ValidationError(f"subset {list(nodes)} has fewer than two nodes")
    if nodes[0] < 0 or nodes[-1] >= network.node_count:
        raise ValidationError(
            f"subset {list(nodes)} out of range for {network.node_count} nodes"
        )
    if samples < 1:
        raise ValidationError(f"sample count must be >= 1, got {samples}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if network.arc_count == 0:
        return McEstimate(0.0, 0.0, samples, seed)
    block_count = (samples + _MC_BLOCK - 1) // _MC_BLOCK
    seed_seqs = np.random.SeedSequence(seed).spawn(block_count)
    jobs = []
    remaining = samples
    for seq in seed_seqs:
        block_len = min(_MC_BLOCK, remaining)
        remaining -= block_len
        jobs.append((network, nodes, block_len, seq))
    if workers == 1 or len(jobs) == 1:
        successes = sum(_mc_block(*job) for job in jobs)
    else:
        with Pool(processes=min(workers, len(jobs))) as pool:
            successes = sum(pool.starmap(_mc_block, jobs))
    mean = successes / samples
    std_error = math.sqrt(mean * (1.0 - mean) / samples)
    return McEstimate(mean, std_error, samples, seed)


def bridge_two_terminal_closed_form(p: float) -> float:
    """Two-terminal reliability of the 4-node bridge between the two
    degree-2 corners, every arc working with probability p:
    2p^2 + 2p^3 - 5p^4 + 2p^5."""
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"probability {p} outside [0, 1]")
    return p * p * (2.0 + p * (2.0 + p * (-5.0 + 2.0 * p)))

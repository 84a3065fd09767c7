"""Layered connectivity search over a realized subgraph.

Everything here is a breadth-style sweep: layer 0 is a seed node, and each
next layer is every yet-unlayered node adjacent to the current layer.  One
sweep answers s-t connectivity (plsa_connected); restarting the sweep from
the smallest unvisited node until all nodes are covered yields the
connected-component partition in a single pass over the nodes
(tlsa_components).  repeated_plsa is the deliberately naive all-pairs
variant kept as a differential-testing and benchmarking reference.

Determinism conventions: sweep seeds are the smallest unvisited node id,
and nodes inside a layer are ordered ascending.  A sweep with a target
stops at the layer containing the target; a sweep without one runs until
the first empty layer, which is recorded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .network import Subgraph

ConnectivityMatrix = list[list[int]]


@dataclass(frozen=True)
class LayerTrace:
    """Layers of one sweep, in discovery order."""

    seed: int
    layers: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ComponentPartition:
    """Disjoint connected node subsets covering all nodes, with one
    sweep trace per component, in seed (= smallest member) order."""

    components: tuple[tuple[int, ...], ...]
    traces: tuple[LayerTrace, ...]


def _mask_nodes(mask: int) -> tuple[int, ...]:
    nodes = []
    while mask:
        low = mask & -mask
        nodes.append(low.bit_length() - 1)
        mask ^= low
    return tuple(nodes)


def component_masks(neighbor_masks: list[int], node_count: int) -> list[int]:
    """Component bitmasks by repeated layered sweeps, smallest seed first.

    This is the partition search stripped to bit arithmetic; it is the
    hot path shared by the reliability engine.
    """
    comps = []
    unvisited = (1 << node_count) - 1
    while unvisited:
        comp = 0
        layer = unvisited & -unvisited
        while layer:
            comp |= layer
            nxt = 0
            bits = layer
            while bits:
                low = bits & -bits
                nxt |= neighbor_masks[low.bit_length() - 1]
                bits ^= low
            # nodes already assigned a layer never re-enter
            layer = nxt & ~comp
        comps.append(comp)
        unvisited &= ~comp
    return comps


def plsa_connected(
    subgraph: Subgraph, s: int, t: int
) -> tuple[bool, LayerTrace]:
    """Decide s-t connectivity by one layered sweep from s.

    Returns the verdict and the sweep trace: on success the last layer is
    the one containing t, on failure it is the first empty layer.  s == t
    counts as connected.
    """
    n = subgraph.network.node_count
    if not (0 <= s < n and 0 <= t < n):
        raise ValidationError(f"node pair ({s}, {t}) out of range for n={n}")
    masks = subgraph.neighbor_masks()
    target = 1 << t
    layers: list[tuple[int, ...]] = []
    visited = 0
    layer = 1 << s
    while layer:
        layers.append(_mask_nodes(layer))
        if layer & target:
            return True, LayerTrace(s, tuple(layers))
        visited |= layer
        nxt = 0
        bits = layer
        while bits:
            low = bits & -bits
            nxt |= masks[low.bit_length() - 1]
            bits ^= low
        layer = nxt & ~visited
    layers.append(())
    return False, LayerTrace(s, tuple(layers))


def repeated_plsa(subgraph: Subgraph) -> ConnectivityMatrix:
    """All-pairs connectivity by one plsa_connected call per node pair.

    Quadratically many sweeps by construction; kept as the reference the
    single-pass partition is benchmarked and differentially tested against.
    """
    n = subgraph.network.node_count
    conn = [[0] * n for _ in range(n)]
    for i in range(n):
        conn[i][i] = 1
        for j in range(i + 1, n):
            ok, _ = plsa_connected(subgraph, i, j)
            if ok:
                conn[i][j] = conn[j][i] = 1
    return conn


def tlsa_components(subgraph: Subgraph) -> ComponentPartition:
    """Connected-component partition by restarted layered sweeps.

    Each sweep seeds at the smallest node not yet in any component, records
    its layers through the terminating empty layer, and contributes the
    union of its layers as one component.  Every node is layered exactly
    once across all sweeps.
    """
    n = subgraph.network.node_count
    masks = subgraph.neighbor_masks()
    components: list[tuple[int, ...]] = []
    traces: list[LayerTrace] = []
    unvisited = (1 << n) - 1
    while unvisited:
        seed_mask = unvisited & -unvisited
        seed = seed_mask.bit_length() - 1
        comp = 0
        layers: list[tuple[int, ...]] = []
        layer = seed_mask
        while layer:
            layers.append(_mask_nodes(layer))
            comp |= layer
            nxt = 0
            bits = layer
            while bits:
                low = bits & -bits
                nxt |= masks[low.bit_length() - 1]
                bits ^= low
            layer = nxt & ~comp
        layers.append(())
        components.append(_mask_nodes(comp))
        traces.append(LayerTrace(seed, tuple(layers)))
        unvisited &= ~comp
    return ComponentPartition(tuple(components), tuple(traces))

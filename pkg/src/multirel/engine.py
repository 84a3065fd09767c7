"""Exact all-multiterminal reliability by exhaustive state enumeration.

The table has one entry per subset label (the integer sum of 2^v over the
subset's nodes).  Entry R_label is the probability that every node of the
subset lies in one connected component of the random subgraph; connecting
paths may pass through nodes outside the subset.  Labels naming fewer than
two nodes are structurally zero.

The computation walks every arc-state vector in binary-addition order,
partitions each realized subgraph into components with the layered search,
and accumulates the state probability.  Rather than crediting every subset
label once per state, states are first folded into a weight per distinct
component bitmask; each weight is then expanded once over that component's
two-or-more-node subsets.  This regrouping is a pure reordering of the
same additions.  The state space can be sharded into emission-index ranges
processed by worker processes whose partial accumulators merge by addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from .connectivity import ComponentPartition, component_masks
from .enumeration import (
    StateVector,
    enumerate_backward,
    enumerate_forward,
    enumerate_node_subsets,
    state_probability,
)
from .errors import GuardError, ValidationError
from .network import Network, network_fingerprint

SubsetLabel = int

DEFAULT_MAX_NODES = 20
DEFAULT_MAX_ARCS = 26
# beyond ~2^20 states the accumulators see enough terms that compensated
# summation is worth its constant factor
COMPENSATION_THRESHOLD = 20


def label_of_nodes(nodes: Iterable[int]) -> SubsetLabel:
    """Bitmask label of a node subset."""
    label = 0
    for v in nodes:
        label |= 1 << v
    return label


def nodes_of_label(label: SubsetLabel) -> tuple[int, ...]:
    """Ascending node ids named by a label."""
    nodes = []
    while label:
        low = label & -label
        nodes.append(low.bit_length() - 1)
        label ^= low
    return tuple(nodes)


@dataclass(frozen=True)
class ReliabilityTable:
    """All 2^n subset reliabilities plus the fingerprint of the network
    they were computed from."""

    entries: tuple[float, ...]
    node_count: int
    fingerprint: str

    def __post_init__(self) -> None:
        if len(self.entries) != 1 << self.node_count:
            raise ValueError(
                f"table must have {1 << self.node_count} entries, "
                f"got {len(self.entries)}"
            )
        for label, value in enumerate(self.entries):
            if label.bit_count() < 2:
                if value != 0.0:
                    raise ValueError(
                        f"label {label} names fewer than two nodes but has "
                        f"nonzero entry {value}"
                    )
            elif not 0.0 <= value <= 1.0 + 1e-12:
                raise ValueError(f"entry {label} out of range: {value}")


@dataclass(frozen=True)
class StateCredit:
    """One state's contribution: its probability and the labels it credits."""

    state: StateVector
    probability: float
    credited_labels: tuple[SubsetLabel, ...]


@dataclass(frozen=True)
class SymmetryReport:
    """Result of checking the table against one relabeling of the nodes."""

    permutation: tuple[int, ...]
    max_abs_diff: float
    violations: tuple[tuple[SubsetLabel, SubsetLabel, float], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def proper_subset_labels(
    component: Iterable[int], node_count: int
) -> Iterator[SubsetLabel]:
    """Labels of every subset of the component with at least two nodes.

    Enumerated by the binary-addition stream over the component's sorted
    node list, so a component of c nodes yields 2^c - c - 1 labels.
    """
    nodes = sorted(set(component))
    if not nodes:
        raise ValidationError("component must be nonempty")
    if nodes[0] < 0 or nodes[-1] >= node_count:
        raise ValidationError(
            f"component {nodes} out of range for {node_count} nodes"
        )
    return _subset_label_stream(nodes)


def _subset_label_stream(nodes: list[int]) -> Iterator[SubsetLabel]:
    bit_values = [1 << v for v in nodes]
    for vec in enumerate_node_subsets(len(nodes)):
        size = 0
        label = 0
        for value, bit in zip(bit_values, vec):
            if bit:
                label += value
                size += 1
        if size >= 2:
            yield label


def credit_state(
    network: Network, state: Sequence[int], partition: ComponentPartition
) -> StateCredit:
    """Contribution of one state, given its component partition."""
    pr = state_probability(network, state)
    labels: list[SubsetLabel] = []
    for comp in partition.components:
        if len(comp) >= 2:
            labels.extend(proper_subset_labels(comp, network.node_count))
    return StateCredit(tuple(state), pr, tuple(sorted(labels)))


def _range_weights(
    network: Network, start: int, stop: int, order: str, compensated: bool
):
    """Fold the states with emission indices in [start, stop) into a
    weight per component bitmask (single-node components are dropped)."""
    n = network.node_count
    m = network.arc_count
    ps = [a.reliability for a in network.arcs]
    qs = [1.0 - p for p in ps]
    us = [a.u for a in network.arcs]
    vs = [a.v for a in network.arcs]
    ubits = [1 << u for u in us]
    vbits = [1 << v for v in vs]
    masks_of = component_masks
    if order == "backward":
        stream = enumerate_backward(m, start, stop)
    else:
        stream = enumerate_forward(m, start, stop)
    weights: dict[int, object] = {}
    for x in stream:
        pr = 1.0
        nm = [0] * n
        for i, bit in enumerate(x):
            if bit:
                pr *= ps[i]
                nm[us[i]] |= vbits[i]
                nm[vs[i]] |= ubits[i]
            else:
                pr *= qs[i]
        if pr == 0.0:
            continue
        for comp in masks_of(nm, n):
            if comp & (comp - 1):  # at least two nodes
                if compensated:
                    acc = weights.get(comp)
                    if acc is None:
                        weights[comp] = [pr, 0.0]
                    else:
                        _neumaier_add(acc, pr)
                else:
                    weights[comp] = weights.get(comp, 0.0) + pr
    return weights


def _neumaier_add(acc: list[float], term: float) -> None:
    """Compensated accumulation: acc is [running sum, correction]."""
    total = acc[0] + term
    if abs(acc[0]) >= abs(term):
        acc[1] += (acc[0] - total) + term
    else:
        acc[1] += (term - total) + acc[0]
    acc[0] = total


def _merge_weights(partials: list[dict], compensated: bool) -> dict[int, float]:
    merged: dict[int, object] = {}
    for partial in partials:
        for comp, value in partial.items():
            if compensated:
                acc = merged.get(comp)
                if acc is None:
                    merged[comp] = [value[0], value[1]]
                else:
                    _neumaier_add(acc, value[0])
                    _neumaier_add(acc, value[1])
            else:
                merged[comp] = merged.get(comp, 0.0) + value
    if compensated:
        return {comp: acc[0] + acc[1] for comp, acc in merged.items()}
    return merged


def compute_all_multiterminal(
    network: Network,
    *,
    workers: int = 1,
    order: str = "forward",
    max_nodes: int = DEFAULT_MAX_NODES,
    max_arcs: int = DEFAULT_MAX_ARCS,
    compensated: bool | None = None,
) -> ReliabilityTable:
    """Exact reliability table over all 2^m arc states.

    workers > 1 shards the emission-index range across processes; the
    partial accumulators merge by addition, so worker count changes the
    result only by floating-point reassociation.  compensated=None enables
    compensated summation automatically once m exceeds 20 coordinates.
    """
    n = network.node_count
    m = network.arc_count
    if n > max_nodes:
        raise GuardError(f"{n} nodes exceeds the max_nodes guard ({max_nodes})")
    if m > max_arcs:
        raise GuardError(f"{m} arcs exceeds the max_arcs guard ({max_arcs})")
    if order not in ("forward", "backward"):
        raise ValueError(f"order must be 'forward' or 'backward', got {order!r}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if compensated is None:
        compensated = m > COMPENSATION_THRESHOLD

    if m == 0:
        weights: dict[int, float] = {}
    else:
        total = 1 << m
        bounds = [total * w // workers for w in range(workers + 1)]
        jobs = [
            (network, bounds[w], bounds[w + 1], order, compensated)
            for w in range(workers)
            if bounds[w] < bounds[w + 1]
        ]
        if len(jobs) <= 1:
            partials = [_range_weights(*job) for job in jobs]
        else:
            with Pool(processes=len(jobs)) as pool:
                partials = pool.starmap(_range_weights, jobs)
        weights = _merge_weights(partials, compensated)

    entries = [0.0] * (1 << n)
    for comp in sorted(weights):
        weight = weights[comp]
        for label in proper_subset_labels(nodes_of_label(comp), n):
            entries[label] += weight
    return ReliabilityTable(tuple(entries), n, network_fingerprint(network))


def subset_reliability(table: ReliabilityTable, subset: Iterable[int]) -> float:
    """Table entry for an explicit node subset (two or more distinct nodes)."""
    nodes = sorted(set(subset))
    if len(nodes) < 2:
        raise ValidationError(f"subset {nodes} has fewer than two nodes")
    if nodes[0] < 0 or nodes[-1] >= table.node_count:
        raise ValidationError(
            f"subset {nodes} out of range for {table.node_count} nodes"
        )
    return table.entries[label_of_nodes(nodes)]


def all_pair_view(table: ReliabilityTable) -> list[list[float]]:
    """n x n matrix of pair reliabilities; the diagonal is 1 by convention."""
    n = table.node_count
    view = [[1.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            value = table.entries[(1 << i) | (1 << j)]
            view[i][j] = view[j][i] = value
    return view


def size_stratified_average(table: ReliabilityTable, k: int) -> float:
    """Mean table entry over all subsets of exactly k nodes."""
    n = table.node_count
    if not 2 <= k <= n:
        raise ValueError(f"subset size {k} not in [2, {n}]")
    values = [
        value for label, value in enumerate(table.entries)
        if label.bit_count() == k
    ]
    return sum(values) / len(values)


def monotonicity_audit(
    table: ReliabilityTable, tol: float = 1e-12
) -> list[tuple[SubsetLabel, SubsetLabel, float, float]]:
    """Violations of "a superset is never more reliable than its subsets".

    Checks every pair (subset, superset) with the subset naming at least
    two nodes; returns (subset label, superset label, subset entry,
    superset entry) for each pair where the superset entry exceeds the
    subset entry by more than tol.  Exhaustive over submask pairs, so the
    cost grows as 3^n; intended for audit-sized tables.
    """
    entries = table.entries
    violations = []
    for sup in range(len(entries)):
        if sup.bit_count() < 3:
            continue
        r_sup = entries[sup]
        sub = (sup - 1) & sup
        while sub:
            if sub.bit_count() >= 2 and r_sup > entries[sub] + tol:
                violations.append((sub, sup, entries[sub], r_sup))
            sub = (sub - 1) & sup
    return violations


def symmetry_check(
    network: Network,
    permutation: Sequence[int],
    table: ReliabilityTable,
    tol: float = 1e-12,
) -> SymmetryReport:
    """Check the table against a node relabeling.

    The permutation must map the arc set onto itself with every image arc
    carrying exactly the original arc's reliability; otherwise it is
    rejected, naming the first offending arc and its image.  On an
    admissible permutation, every label's entry is compared with its
    image's entry.
    """
    n = network.node_count
    perm = tuple(permutation)
    if sorted(perm) != list(range(n)):
        raise ValidationError(
            f"{perm} is not a permutation of nodes 0..{n - 1}"
        )
    by_pair = {
        frozenset((a.u, a.v)): a.reliability for a in network.arcs
    }
    for arc in network.arcs:
        image = frozenset((perm[arc.u], perm[arc.v]))
        if image not in by_pair:
            raise ValidationError(
                f"not an automorphism: arc ({arc.u}, {arc.v}) maps to "
                f"({perm[arc.u]}, {perm[arc.v]}), which is not an arc"
            )
        if by_pair[image] != arc.reliability:
            raise ValidationError(
                f"not an automorphism: arc ({arc.u}, {arc.v}) maps to "
                f"({perm[arc.u]}, {perm[arc.v]}), whose reliability differs"
            )
    max_diff = 0.0
    violations = []
    for label, value in enumerate(table.entries):
        image_label = 0
        rest = label
        while rest:
            low = rest & -rest
            image_label |= 1 << perm[low.bit_length() - 1]
            rest ^= low
        diff = abs(value - table.entries[image_label])
        if diff > max_diff:
            max_diff = diff
        if diff > tol:
            violations.append((label, image_label, diff))
    return SymmetryReport(perm, max_diff, tuple(violations))


def average_degree(network: Network, subset: Iterable[int]) -> float:
    """Mean degree (in the full network) over the subset's nodes."""
    nodes = sorted(set(subset))
    if not nodes:
        raise ValidationError("subset must be nonempty")
    if nodes[0] < 0 or nodes[-1] >= network.node_count:
        raise ValidationError(
            f"subset {nodes} out of range for {network.node_count} nodes"
        )
    degree = [0] * network.node_count
    for arc in network.arcs:
        degree[arc.u] += 1
        degree[arc.v] += 1
    return sum(degree[v] for v in nodes) / len(nodes)

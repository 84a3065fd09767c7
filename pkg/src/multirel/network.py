"""Network data model, document parsing, and subgraph realization.

A network is an undirected graph with dense node labels 0..n-1 and an
ordered arc list; arc i's position binds it to coordinate i of every
state vector.  The document grammar is line oriented:

    # comment (a '#' starts a comment anywhere on a line)
    nodes <n>        exactly once, first non-comment directive
    arc <u> <v> <p>  one per arc, in coordinate order

Nodes are perfect; only arcs fail, independently, arc i working with
probability p_i.  Loops and parallel arcs are rejected.  Isolated nodes
are accepted; every subset containing one simply has zero reliability.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, ValidationError


@dataclass(frozen=True)
class Arc:
    """Undirected arc: id is its position in the arc list and its
    state-vector coordinate; reliability is Pr(arc works)."""

    id: int
    u: int
    v: int
    reliability: float


@dataclass(frozen=True)
class Network:
    """Immutable binary-state network: n nodes, ordered arc list."""

    node_count: int
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        n = self.node_count
        if n < 1:
            raise ValidationError(f"node count must be >= 1, got {n}")
        seen: set[frozenset[int]] = set()
        for position, arc in enumerate(self.arcs):
            if arc.id != position:
                raise ValidationError(
                    f"arc id {arc.id} does not match list position {position}"
                )
            if not (0 <= arc.u < n and 0 <= arc.v < n):
                raise ValidationError(
                    f"arc {arc.id}: endpoint out of range for {n} nodes: "
                    f"({arc.u}, {arc.v})"
                )
            if arc.u == arc.v:
                raise ValidationError(f"arc {arc.id}: loop at node {arc.u}")
            pair = frozenset((arc.u, arc.v))
            if pair in seen:
                raise ValidationError(
                    f"arc {arc.id}: parallel arc between {arc.u} and {arc.v}"
                )
            seen.add(pair)
            if not 0.0 <= arc.reliability <= 1.0:
                raise ValidationError(
                    f"arc {arc.id}: reliability {arc.reliability} outside [0, 1]"
                )

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @classmethod
    def from_arc_list(
        cls, node_count: int, arcs: Iterable[tuple[int, int, float]]
    ) -> "Network":
        """Build a Network from (u, v, reliability) triples in coordinate order."""
        return cls(
            node_count,
            tuple(Arc(i, u, v, p) for i, (u, v, p) in enumerate(arcs)),
        )

    def with_uniform_reliability(self, p: float) -> "Network":
        """Copy of this network with every arc reliability set to p."""
        if not 0.0 <= p <= 1.0:
            raise ValidationError(f"uniform reliability {p} outside [0, 1]")
        return Network(
            self.node_count,
            tuple(Arc(a.id, a.u, a.v, p) for a in self.arcs),
        )


@dataclass(frozen=True)
class Subgraph:
    """The subgraph realized by a state vector: same nodes, active arcs only."""

    network: Network
    active: frozenset[int]

    def __post_init__(self) -> None:
        m = self.network.arc_count
        for i in self.active:
            if not 0 <= i < m:
                raise ValidationError(f"active arc id {i} out of range for m={m}")

    def neighbor_masks(self) -> list[int]:
        """Adjacency as one bitmask per node, built from active arcs only."""
        masks = [0] * self.network.node_count
        for i in self.active:
            arc = self.network.arcs[i]
            masks[arc.u] |= 1 << arc.v
            masks[arc.v] |= 1 << arc.u
        return masks


def parse_network(text: str, uniform_p: float | None = None) -> Network:
    """Parse a network document; optionally override every arc reliability.

    Grammar errors raise ParseError with the offending line number;
    model-rule violations (loop, parallel arc, bad probability or node id)
    raise ValidationError.
    """
    node_count: int | None = None
    arcs: list[tuple[int, int, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "nodes":
            if node_count is not None:
                raise ParseError(f"line {lineno}: duplicate 'nodes' directive")
            if arcs:
                raise ParseError(f"line {lineno}: 'nodes' must precede arcs")
            if len(fields) != 2:
                raise ParseError(f"line {lineno}: expected 'nodes <n>'")
            try:
                node_count = int(fields[1])
            except ValueError:
                raise ParseError(f"line {lineno}: node count {fields[1]!r} "
                                 "is not an integer") from None
        elif fields[0] == "arc":
            if node_count is None:
                raise ParseError(f"line {lineno}: 'arc' before 'nodes'")
            if len(fields) != 4:
                raise ParseError(f"line {lineno}: expected 'arc <u> <v> <p>'")
            try:
                u, v = int(fields[1]), int(fields[2])
                p = float(fields[3])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed arc fields "
                                 f"{fields[1:]}") from None
            arcs.append((u, v, p))
        else:
            raise ParseError(f"line {lineno}: unknown directive {fields[0]!r}")
    if node_count is None:
        raise ParseError("document has no 'nodes' directive")
    network = Network.from_arc_list(node_count, arcs)
    if uniform_p is not None:
        network = network.with_uniform_reliability(uniform_p)
    return network


def load_network(path: str, uniform_p: float | None = None) -> Network:
    """Read and parse a network document from a file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_network(handle.read(), uniform_p=uniform_p)


def render_network(network: Network) -> str:
    """Serialize back to the document grammar; parse(render(N)) == N."""
    lines = [f"nodes {network.node_count}"]
    for arc in network.arcs:
        lines.append(f"arc {arc.u} {arc.v} {arc.reliability!r}")
    return "\n".join(lines) + "\n"


def network_fingerprint(network: Network) -> str:
    """Stable hex digest of the network's canonical serialization."""
    return hashlib.sha256(render_network(network).encode("utf-8")).hexdigest()


def realize_subgraph(network: Network, state: Sequence[int]) -> Subgraph:
    """Subgraph whose active arcs are exactly those with state coordinate 1."""
    if len(state) != network.arc_count:
        raise ValidationError(
            f"state length {len(state)} does not match arc count "
            f"{network.arc_count}"
        )
    return Subgraph(network, frozenset(i for i, bit in enumerate(state) if bit))

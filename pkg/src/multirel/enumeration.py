"""Binary-state vector streams in binary-addition order.

A state vector is an m-tuple of 0/1 coordinates, coordinate i giving the
state of arc i.  The forward stream starts at the zero vector and applies
binary increment with the carry entering at coordinate 0, so the k-th
emission is the little-endian binary expansion of k and its forward weight
(sum of 2^i over working coordinates) equals k.  The backward stream emits
the coordinate reversal of each forward emission.  Streams are lazy and may
be opened on a sub-range [start, stop) of emission indices, which is what
makes the state space shardable across workers.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import ValidationError
from .network import Network

StateVector = tuple[int, ...]


def _check_range(m: int, start: int, stop: int | None) -> int:
    if m < 1:
        raise ValueError(f"coordinate count must be >= 1, got {m}")
    limit = 1 << m
    if stop is None:
        stop = limit
    if not 0 <= start <= stop <= limit:
        raise ValueError(
            f"range [{start}, {stop}) not within [0, {limit}) for m={m}"
        )
    return stop


def enumerate_forward(
    m: int, start: int = 0, stop: int | None = None
) -> Iterator[StateVector]:
    """Yield state vectors start..stop-1 of the forward order (default: all 2^m)."""
    stop = _check_range(m, start, stop)
    x = [(start >> i) & 1 for i in range(m)]
    for _ in range(stop - start):
        yield tuple(x)
        i = 0
        while i < m and x[i]:
            x[i] = 0
            i += 1
        if i < m:
            x[i] = 1
        # a carry leaving the last coordinate means the stream is exhausted


def enumerate_backward(
    m: int, start: int = 0, stop: int | None = None
) -> Iterator[StateVector]:
    """Yield the coordinate reversal of each forward emission, same indexing."""
    for x in enumerate_forward(m, start, stop):
        yield x[::-1]


def enumerate_node_subsets(k: int) -> Iterator[StateVector]:
    """Forward stream over a k-coordinate universe; used for subset labeling."""
    return enumerate_forward(k)


def weight_forward(state: Sequence[int]) -> int:
    """Sum of 2^i over working coordinates; equals the forward emission index."""
    return sum(bit << i for i, bit in enumerate(state))


def weight_backward(state: Sequence[int]) -> int:
    """Mirrored weight: coordinate i contributes 2^(m-1-i)."""
    m = len(state)
    return sum(bit << (m - 1 - i) for i, bit in enumerate(state))


def state_probability(network: Network, state: Sequence[int]) -> float:
    """Probability of one state: product of p_i (working) or 1-p_i (failed)."""
    if len(state) != network.arc_count:
        raise ValidationError(
            f"state length {len(state)} does not match arc count "
            f"{network.arc_count}"
        )
    pr = 1.0
    for arc, bit in zip(network.arcs, state):
        pr *= arc.reliability if bit else 1.0 - arc.reliability
    return pr

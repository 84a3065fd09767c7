"""State streams, ordering weights, and state probabilities."""

from __future__ import annotations

import random

import pytest

from conftest import random_network
from multirel import (
    ValidationError,
    enumerate_backward,
    enumerate_forward,
    enumerate_node_subsets,
    parse_network,
    state_probability,
    weight_backward,
    weight_forward,
)

BRIDGE = """\
nodes 4
arc 0 1 0.9
arc 0 2 0.8
arc 1 2 0.7
arc 1 3 0.7
arc 2 3 0.8
"""


def test_forward_known_emissions():
    states = list(enumerate_forward(5))
    assert states[0] == (0, 0, 0, 0, 0)
    assert states[7] == (1, 1, 1, 0, 0)
    assert states[31] == (1, 1, 1, 1, 1)
    assert len(states) == 32
    assert len(set(states)) == 32


def test_forward_small_orders():
    assert list(enumerate_forward(2)) == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert list(enumerate_forward(1)) == [(0,), (1,)]


def test_forward_weight_identity():
    for m in (1, 3, 5, 8):
        for k, state in enumerate(enumerate_forward(m)):
            assert weight_forward(state) == k


def test_backward_known_emissions():
    states = list(enumerate_backward(5))
    assert states[7] == (0, 0, 1, 1, 1)
    assert states[31] == (1, 1, 1, 1, 1)
    assert list(enumerate_backward(1)) == [(0,), (1,)]


def test_backward_is_coordinate_reversal():
    forward = list(enumerate_forward(6))
    backward = list(enumerate_backward(6))
    assert backward == [state[::-1] for state in forward]
    for k, state in enumerate(backward):
        assert weight_backward(state) == k


def test_weight_values():
    assert weight_forward((1, 1, 0, 1, 0)) == 11
    assert weight_forward((0, 0, 0, 0, 0)) == 0
    assert weight_backward((0, 0, 1, 1, 1)) == 7
    assert weight_backward((1, 1, 1, 1, 1)) == 31
    assert weight_backward((0,) * 4) == 0


def test_node_subset_stream():
    subsets = list(enumerate_node_subsets(4))
    assert subsets[0] == (0, 0, 0, 0)
    assert subsets[1] == (1, 0, 0, 0)
    assert subsets[3] == (1, 1, 0, 0)
    assert len(subsets) == 16
    assert list(enumerate_node_subsets(1)) == [(0,), (1,)]


def test_range_partition_concatenates_to_full_stream():
    full = list(enumerate_forward(5))
    sharded = (
        list(enumerate_forward(5, 0, 9))
        + list(enumerate_forward(5, 9, 20))
        + list(enumerate_forward(5, 20, 32))
    )
    assert sharded == full
    assert list(enumerate_forward(5, 13, 13)) == []
    assert list(enumerate_backward(5, 7, 8)) == [(0, 0, 1, 1, 1)]


def test_range_validation():
    with pytest.raises(ValueError):
        list(enumerate_forward(0))
    with pytest.raises(ValueError):
        list(enumerate_forward(3, -1, 4))
    with pytest.raises(ValueError):
        list(enumerate_forward(3, 0, 9))
    with pytest.raises(ValueError):
        list(enumerate_forward(3, 5, 2))


def test_state_probability_known_values():
    uniform = parse_network(BRIDGE, uniform_p=0.9)
    assert state_probability(uniform, (1, 1, 1, 0, 0)) == pytest.approx(
        0.00729, abs=1e-15
    )
    assert state_probability(uniform, (1, 1, 1, 1, 1)) == pytest.approx(
        0.59049, abs=1e-15
    )
    assert state_probability(uniform, (0, 0, 0, 0, 0)) == pytest.approx(
        1e-5, abs=1e-18
    )
    mixed = parse_network(BRIDGE)
    assert state_probability(mixed, (1, 1, 1, 1, 1)) == pytest.approx(
        0.28224, abs=1e-15
    )


def test_state_probability_length_mismatch():
    net = parse_network(BRIDGE)
    with pytest.raises(ValidationError):
        state_probability(net, (1, 0))


def test_probabilities_sum_to_one():
    for net in (parse_network(BRIDGE), parse_network(BRIDGE, uniform_p=0.9)):
        total = sum(
            state_probability(net, s) for s in enumerate_forward(net.arc_count)
        )
        assert abs(total - 1.0) <= 1e-12
    rng = random.Random(77)
    for _ in range(20):
        net = random_network(rng, max_nodes=6, max_arcs=12)
        total = sum(
            state_probability(net, s) for s in enumerate_forward(net.arc_count)
        )
        assert abs(total - 1.0) <= 1e-12

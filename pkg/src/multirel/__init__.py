"""Exact all-multiterminal reliability of binary-state undirected networks.

The engine enumerates every arc-state vector, partitions each realized
subgraph into connected components with a layered search, and accumulates
state probabilities into a table holding the reliability of every node
subset.  Independent oracles (brute force over an integer counter with
union-find, Monte Carlo sampling, and a closed-form bridge formula) verify
the engine along disjoint code paths.
"""

from .connectivity import (
    ComponentPartition,
    LayerTrace,
    component_masks,
    plsa_connected,
    repeated_plsa,
    tlsa_components,
)
from .engine import (
    ReliabilityTable,
    StateCredit,
    SymmetryReport,
    all_pair_view,
    average_degree,
    compute_all_multiterminal,
    credit_state,
    label_of_nodes,
    monotonicity_audit,
    nodes_of_label,
    proper_subset_labels,
    size_stratified_average,
    subset_reliability,
    symmetry_check,
)
from .enumeration import (
    enumerate_backward,
    enumerate_forward,
    enumerate_node_subsets,
    state_probability,
    weight_backward,
    weight_forward,
)
from .errors import (
    GuardError,
    NetworkFormatError,
    ParseError,
    ValidationError,
)
from .network import (
    Arc,
    Network,
    Subgraph,
    load_network,
    network_fingerprint,
    parse_network,
    realize_subgraph,
    render_network,
)
from .oracle import (
    McEstimate,
    bridge_two_terminal_closed_form,
    brute_force_table,
    monte_carlo_estimate,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ComponentPartition",
    "GuardError",
    "LayerTrace",
    "McEstimate",
    "Network",
    "NetworkFormatError",
    "ParseError",
    "ReliabilityTable",
    "StateCredit",
    "Subgraph",
    "SymmetryReport",
    "ValidationError",
    "all_pair_view",
    "average_degree",
    "bridge_two_terminal_closed_form",
    "brute_force_table",
    "component_masks",
    "compute_all_multiterminal",
    "credit_state",
    "enumerate_backward",
    "enumerate_forward",
    "enumerate_node_subsets",
    "label_of_nodes",
    "load_network",
    "monotonicity_audit",
    "monte_carlo_estimate",
    "network_fingerprint",
    "nodes_of_label",
    "parse_network",
    "plsa_connected",
    "proper_subset_labels",
    "realize_subgraph",
    "render_network",
    "repeated_plsa",
    "size_stratified_average",
    "state_probability",
    "subset_reliability",
    "symmetry_check",
    "tlsa_components",
    "weight_backward",
    "weight_forward",
]

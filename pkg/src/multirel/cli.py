"""Command-line surface.

Subcommands:
    compute  full reliability table (or one subset query) as CSV or JSON
    trace    one state's probability, component partition, sweep layers,
             and credited labels
    verify   engine table vs brute-force oracle, max entry difference
    mc       seeded Monte Carlo estimate for one subset

Exit codes: 0 success, 2 input error, 3 size guard exceeded,
4 verification mismatch.  All numeric output is fixed-precision decimal
(round-half-even) at --decimals digits; CSV bytes are stable for a given
configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import engine
from .connectivity import tlsa_components
from .enumeration import weight_forward
from .errors import GuardError, NetworkFormatError
from .network import Network, load_network, realize_subgraph
from .oracle import brute_force_table, monte_carlo_estimate

VERIFY_TOLERANCE = 1e-12


def _fmt(value: float, decimals: int) -> str:
    return f"{value:.{decimals}f}"


def _parse_subset(text: str) -> list[int]:
    try:
        return [int(field) for field in text.split(",") if field.strip() != ""]
    except ValueError:
        raise NetworkFormatError(f"subset {text!r} is not a comma-separated "
                                 "list of node ids") from None


def _parse_state(text: str, arc_count: int) -> tuple[int, ...]:
    if len(text) != arc_count or set(text) - {"0", "1"}:
        raise NetworkFormatError(
            f"state {text!r} is not a {arc_count}-character string of 0/1 "
            "(leftmost character is coordinate 0)"
        )
    return tuple(int(ch) for ch in text)


def _load(args: argparse.Namespace) -> Network:
    return load_network(args.input, uniform_p=args.uniform_p)


def cmd_compute(args: argparse.Namespace) -> int:
    network = _load(args)
    table = engine.compute_all_multiterminal(
        network,
        workers=args.workers,
        max_nodes=args.max_nodes,
        max_arcs=args.max_arcs,
    )
    decimals = args.decimals
    if args.subset is not None:
        nodes = _parse_subset(args.subset)
        value = engine.subset_reliability(table, nodes)
        if args.format == "json":
            payload = {
                "subset": sorted(set(nodes)),
                "label": engine.label_of_nodes(nodes),
                "reliability": float(_fmt(value, decimals)),
            }
            print(json.dumps(payload))
        else:
            print(_fmt(value, decimals))
        return 0
    rows = []
    for label, value in enumerate(table.entries):
        if args.nonzero_only and label.bit_count() < 2:
            continue
        rows.append((label, engine.nodes_of_label(label), value))
    if args.format == "json":
        payload = {
            "fingerprint": table.fingerprint,
            "node_count": table.node_count,
            "arc_count": network.arc_count,
            "entries": [
                {
                    "label": label,
                    "nodes": list(nodes),
                    "size": len(nodes),
                    "reliability": float(_fmt(value, decimals)),
                }
                for label, nodes, value in rows
            ],
        }
        print(json.dumps(payload))
    else:
        print("label,nodes,size,reliability")
        for label, nodes, value in rows:
            joined = " ".join(str(v) for v in nodes)
            print(f'{label},"{joined}",{len(nodes)},{_fmt(value, decimals)}')
    return 0


def cmd_trace(args: argparse.Namespace) -> int:
    network = _load(args)
    state = _parse_state(args.state, network.arc_count)
    partition = tlsa_components(realize_subgraph(network, state))
    credit = engine.credit_state(network, state, partition)
    print(f"state {args.state}")
    print(f"weight {weight_forward(state)}")
    print(f"probability {_fmt(credit.probability, args.decimals)}")
    print(f"components {len(partition.components)}")
    for index, comp in enumerate(partition.components):
        print(f"component {index}: {' '.join(str(v) for v in comp)}")
    for trace in partition.traces:
        rendered = " | ".join(
            " ".join(str(v) for v in layer) if layer else "-"
            for layer in trace.layers
        )
        print(f"sweep seed={trace.seed} layers: {rendered}")
    labels = " ".join(str(label) for label in credit.credited_labels)
    print(f"credited {len(credit.credited_labels)}: {labels}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    network = _load(args)
    table = engine.compute_all_multiterminal(
        network,
        workers=args.workers,
        max_nodes=args.max_nodes,
        max_arcs=args.max_arcs,
    )
    reference = brute_force_table(network)
    max_diff = max(
        abs(a - b) for a, b in zip(table.entries, reference.entries)
    )
    print(f"entries {len(table.entries)}")
    print(f"max_abs_diff {max_diff:.3e}")
    if max_diff <= VERIFY_TOLERANCE:
        print("verdict ok")
        return 0
    print("verdict mismatch")
    return 4


def cmd_mc(args: argparse.Namespace) -> int:
    network = _load(args)
    nodes = _parse_subset(args.subset)
    estimate = monte_carlo_estimate(
        network, nodes, args.samples, args.seed, workers=args.workers
    )
    print(f"mean {_fmt(estimate.mean, args.decimals)}")
    print(f"std_error {_fmt(estimate.std_error, args.decimals)}")
    print(f"samples {estimate.samples}")
    print(f"seed {estimate.seed}")
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="network document path")
    parser.add_argument(
        "--uniform-p", type=float, default=None, metavar="P",
        help="override every arc reliability with P at load time",
    )
    parser.add_argument(
        "--decimals", type=int, default=12, metavar="K",
        help="digits after the decimal point in numeric output (1..17)",
    )
    parser.add_argument(
        "--max-nodes", type=int, default=engine.DEFAULT_MAX_NODES,
        metavar="N", help="refuse networks with more than N nodes",
    )
    parser.add_argument(
        "--max-arcs", type=int, default=engine.DEFAULT_MAX_ARCS,
        metavar="M", help="refuse networks with more than M arcs",
    )


def _add_workers(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--workers", type=int, default=1, metavar="W",
        help="worker processes for range-sharded computation",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multirel",
        description="Exact all-multiterminal reliability of binary-state "
                    "networks, with independent verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser(
        "compute", help="compute the full reliability table"
    )
    _add_common(p_compute)
    _add_workers(p_compute)
    p_compute.add_argument(
        "--format", choices=("csv", "json"), default="csv",
        help="output format for the table",
    )
    p_compute.add_argument(
        "--nonzero-only", action="store_true",
        help="skip labels naming fewer than two nodes",
    )
    p_compute.add_argument(
        "--subset", default=None, metavar="V,V,...",
        help="print only this subset's reliability",
    )
    p_compute.set_defaults(func=cmd_compute)

    p_trace = sub.add_parser(
        "trace", help="show one state's partition and credited labels"
    )
    _add_common(p_trace)
    p_trace.add_argument(
        "--state", required=True, metavar="BITS",
        help="arc state as a 0/1 string, coordinate 0 leftmost",
    )
    p_trace.set_defaults(func=cmd_trace)

    p_verify = sub.add_parser(
        "verify", help="compare the engine against the brute-force oracle"
    )
    _add_common(p_verify)
    _add_workers(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_mc = sub.add_parser(
        "mc", help="Monte Carlo estimate for one subset"
    )
    _add_common(p_mc)
    _add_workers(p_mc)
    p_mc.add_argument(
        "--subset", required=True, metavar="V,V,...",
        help="subset to estimate (two or more node ids)",
    )
    p_mc.add_argument(
        "--samples", type=int, default=100000, help="sample count"
    )
    p_mc.add_argument("--seed", type=int, default=0, help="root seed")
    p_mc.set_defaults(func=cmd_mc)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if not 1 <= args.decimals <= 17:
        print(f"error: --decimals {args.decimals} outside [1, 17]",
              file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NetworkFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

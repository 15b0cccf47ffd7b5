"""Command-line surface.

    countkernel count-fvs FILE -k K [--solve] [--chain-cap N] [--json]
    countkernel oracle FILE -k K --problem fvs|ds
    countkernel replace FILE -k K --what chains|diamonds [-o FILE]
    countkernel gen FAMILY ARGS... [-k K] [-o FILE]

Exit code 0 on success, 2 on parse or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional

from . import generators
from .chain_gadget import replace_all_chains
from .driver import ExactCount, Reduced, count_or_reduce
from .ds_gadget import find_wide_diamonds, replace_wide_diamond
from .fvs_count import count_min_fvs_pair
from .graph_io import ParseError, parse_instance, write_instance
from .multigraph import MultiGraph
from .oracle import brute_min_ds, brute_min_fvs

_NO_CAP = "inf"


def _chain_cap(value: str):
    if value.lower() in (_NO_CAP, "none"):
        return None
    cap = int(value)
    if cap < 1:
        raise argparse.ArgumentTypeError("chain cap must be positive or 'inf'")
    return cap


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="countkernel",
        description="Counting kernelization for minimum feedback vertex sets, "
        "with gadget replacement and brute-force oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count-fvs", help="count minimum FVSs or reduce the instance")
    p_count.add_argument("file")
    p_count.add_argument("-k", type=int, default=None, help="parameter; overrides the file header")
    p_count.add_argument("--solve", action="store_true", help="also count on the reduced instance")
    p_count.add_argument(
        "--chain-cap",
        type=_chain_cap,
        default=4096,
        help="chain replacement threshold; 'inf' means the pure 2^k rule (default 4096)",
    )
    p_count.add_argument("--json", action="store_true", dest="as_json")

    p_oracle = sub.add_parser("oracle", help="brute-force count on a small instance")
    p_oracle.add_argument("file")
    p_oracle.add_argument("-k", type=int, default=None)
    p_oracle.add_argument("--problem", choices=("fvs", "ds"), required=True)

    p_replace = sub.add_parser("replace", help="rewrite chains or wide diamonds as gadgets")
    p_replace.add_argument("file")
    p_replace.add_argument("-k", type=int, default=None)
    p_replace.add_argument("--what", choices=("chains", "diamonds"), required=True)
    p_replace.add_argument("-o", "--output", default=None)

    p_gen = sub.add_parser("gen", help="generate a deterministic instance")
    p_gen.add_argument(
        "family", choices=("cycle", "theta", "grid", "random", "diamond-host")
    )
    p_gen.add_argument("args", type=int, nargs="*")
    p_gen.add_argument("-k", type=int, default=None, help="parameter to embed in the header")
    p_gen.add_argument("--promote2", type=float, default=0.0, help="multiplicity-2 probability (random family)")
    p_gen.add_argument("-o", "--output", default=None)

    return parser


def _load(path: str, k_flag: Optional[int]) -> tuple[MultiGraph, int]:
    with open(path, encoding="utf-8") as handle:
        graph, k_file = parse_instance(handle.read())
    k = k_flag if k_flag is not None else k_file
    if k is None:
        raise ValueError("no parameter: pass -k or put 'k <value>' in the header")
    if k < 0:
        raise ValueError("parameter k must be nonnegative")
    return graph, k


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_count_fvs(args) -> int:
    graph, k = _load(args.file, args.k)
    # a finite cap replaces the pure 2^k threshold, so small runs can force
    # either branch of the dichotomy
    threshold = args.chain_cap if args.chain_cap is not None else 2**k
    outcome = count_or_reduce(graph, k, chain_threshold=threshold)

    report = {"path": outcome.path, "a": None, "b": None, "n_prime": None, "k_prime": None}
    lines = [f"path: {outcome.path}"]
    if isinstance(outcome, ExactCount):
        report["a"] = outcome.size
        report["b"] = outcome.count
        lines.append(f"count: {outcome.count}")
        instance_text = None
    else:
        assert isinstance(outcome, Reduced)
        report["n_prime"] = outcome.graph.num_vertices
        report["k_prime"] = outcome.k
        lines.append(f"k': {outcome.k}")
        if args.solve:
            pair = count_min_fvs_pair(outcome.graph, outcome.k)
            report["a"] = None if math.isinf(pair.size) else pair.size
            report["b"] = pair.count
            lines.append(f"count: {pair.count}")
        instance_text = write_instance(outcome.graph, outcome.k)

    if args.as_json:
        sys.stdout.write(json.dumps(report) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")
        if instance_text is not None:
            sys.stdout.write(instance_text)
    return 0


def _cmd_oracle(args) -> int:
    graph, k = _load(args.file, args.k)
    if args.problem == "fvs":
        pair = brute_min_fvs(graph, k)
    else:
        pair = brute_min_ds(graph, k)
    size = "inf" if math.isinf(pair.size) else pair.size
    sys.stdout.write(f"{size} {pair.count}\n")
    return 0


def _cmd_replace(args) -> int:
    graph, k = _load(args.file, args.k)
    if args.what == "chains":
        longest = max((len(c.path) for c in graph.chains()), default=1)
        new_graph, new_k = replace_all_chains(graph, k, longest)
    else:
        new_graph, new_k = graph, k
        for diamond in find_wide_diamonds(graph):
            new_graph, new_k = replace_wide_diamond(new_graph, diamond, new_k)
    _emit(write_instance(new_graph, new_k), args.output)
    return 0


def _cmd_gen(args) -> int:
    family = args.family
    params = args.args

    def need(count, names):
        if len(params) != count:
            raise ValueError(f"family '{family}' expects arguments: {names}")

    if family == "cycle":
        need(1, "n")
        graph = generators.cycle_graph(params[0])
    elif family == "theta":
        need(3, "l1 l2 l3")
        graph = generators.theta_graph(*params)
    elif family == "grid":
        need(2, "rows cols")
        graph = generators.grid_graph(*params)
    elif family == "random":
        need(3, "n m seed")
        graph = generators.random_multigraph(*params, promote2=args.promote2)
    else:
        need(1, "size")
        graph = generators.diamond_host(params[0])
    if args.k is not None and args.k < 0:
        raise ValueError("parameter k must be nonnegative")
    _emit(write_instance(graph, args.k), args.output)
    return 0


_COMMANDS = {
    "count-fvs": _cmd_count_fvs,
    "oracle": _cmd_oracle,
    "replace": _cmd_replace,
    "gen": _cmd_gen,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Argument parsing and dispatch for the kufam command line"""

import argparse
from typing import List, Optional, TextIO

from config.settings import Limits, settings
from generators.models import GenSpec
from harness import commands


def int_list(value: str) -> List[int]:
    """Comma-separated integers, e.g. ``2,3,4``"""
    try:
        values = [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{value}'")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _add_params(parser: argparse.ArgumentParser, *names: str) -> None:
    for name in names:
        parser.add_argument(f"--{name}", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kufam",
        description="Decompose (k,u)-intersecting uniform families into (ell,u)-intersecting parts",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="Override KUFAM_LOG_LEVEL for this run",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    pg = sub.add_parser("gen", help="Generate a family file")
    pg.add_argument("--kind", required=True, choices=["random", "star", "scattered_stars", "sunflower", "complete"])
    for name in ("n", "s", "count", "u", "k", "per-star", "core-size", "petal-size", "petals"):
        pg.add_argument(f"--{name}", type=int, default=None)
    pg.add_argument("--seed", type=int, default=0)

    pc = sub.add_parser("check", help="Decide whether a family is (k,u)-intersecting")
    pc.add_argument("file", help="Family file, '-' for standard input")
    _add_params(pc, "k", "u")
    pc.add_argument("--verbose", action="store_true")

    pd = sub.add_parser("decompose", help="Constructive decomposition into (ell,u)-intersecting parts")
    pd.add_argument("file")
    _add_params(pd, "k", "u", "ell")
    pd.add_argument("--compact", action="store_true", help="Greedily merge parts after decomposing")
    pd.add_argument("--verify", action="store_true", help="Exit 1 when verification fails")
    pd.add_argument("--format", choices=["text", "json"], default="text")
    pd.add_argument("--verbose", action="store_true")

    po = sub.add_parser("oracle", help="Exact minimum number of (ell,u)-intersecting parts")
    po.add_argument("file")
    _add_params(po, "ell", "u")
    po.add_argument("--cap", type=int, default=None)
    po.add_argument("--verbose", action="store_true")

    pb = sub.add_parser("bound", help="Evaluate ceil((k-1)/(ell-1) * C(s,u))")
    _add_params(pb, "s", "k", "u", "ell")

    pe = sub.add_parser("experiment", help="Parameter sweep emitting CSV")
    pe.add_argument("--s", type=int_list, required=True)
    pe.add_argument("--k", type=int_list, required=True)
    pe.add_argument("--n", type=int_list, required=True)
    pe.add_argument("--u", type=int_list, default=None, help="Default: 1..s")
    pe.add_argument("--ell", type=int_list, default=None, help="Default: 2..k-1")
    pe.add_argument("--trials", type=int, default=1)
    pe.add_argument("--seed", type=int, default=0)
    pe.add_argument("--size", type=int, default=12, help="Upper bound on generated family size")
    pe.add_argument("--oracle-cap", type=int, default=None)
    pe.add_argument("--out", default=None, help="CSV path (default: standard output)")
    pe.add_argument("--no-timing", action="store_true", help="Leave the wall_ms column empty")
    pe.add_argument("--workers", type=int, default=None)

    ps = sub.add_parser("search", help="Search for families with large minimum covers")
    _add_params(ps, "n", "s", "k", "u", "ell")
    ps.add_argument("--budget", type=int, default=None)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--exhaustive", action="store_true", default=None)

    return parser


def dispatch(args: argparse.Namespace, out: TextIO) -> int:
    """Run the parsed subcommand and return its exit code"""
    if args.cmd == "gen":
        spec = GenSpec(
            kind=args.kind,
            n=args.n,
            s=args.s,
            count=args.count,
            u=args.u,
            k=args.k,
            per_star=args.per_star,
            core_size=args.core_size,
            petal_size=args.petal_size,
            petals=args.petals,
            seed=args.seed,
        )
        return commands.cmd_gen(spec, out)
    if args.cmd == "check":
        return commands.cmd_check(args.file, args.k, args.u, out, verbose=args.verbose)
    if args.cmd == "decompose":
        return commands.cmd_decompose(
            args.file, args.k, args.u, args.ell, out,
            compact_parts=args.compact,
            verify=args.verify,
            output_format=args.format,
            verbose=args.verbose,
        )
    if args.cmd == "oracle":
        return commands.cmd_oracle(args.file, args.ell, args.u, out, cap=args.cap, verbose=args.verbose)
    if args.cmd == "bound":
        return commands.cmd_bound(args.s, args.k, args.u, args.ell, out)
    if args.cmd == "experiment":
        return commands.cmd_experiment(
            args.s, args.k, args.n, out,
            u_values=args.u,
            ell_values=args.ell,
            trials=args.trials,
            seed=args.seed,
            size=args.size,
            oracle_cap=args.oracle_cap,
            timing=not args.no_timing,
            workers=args.workers if args.workers is not None else settings.workers,
            out_path=args.out,
        )
    if args.cmd == "search":
        return commands.cmd_search(
            args.n, args.s, args.k, args.u, args.ell, out,
            budget=args.budget,
            seed=args.seed,
            exhaustive=args.exhaustive,
            limits=Limits(),
        )
    raise ValueError(f"unknown command {args.cmd}")


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)

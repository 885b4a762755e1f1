"""
Command implementations behind the CLI.

Each command writes its data product to ``out`` and returns the process exit
code. Exceptions from the library propagate to ``main.run``, which owns the
exception-to-exit-code mapping.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from checks.intersecting import find_witness, verify_decomposition
from config.settings import Limits
from decomposer.bound import theorem_bound
from decomposer.formats import render_json, render_text
from decomposer.pipeline import compact, decompose
from family.codec import parse_family, serialize_family
from family.models import BoundParams, DomainError, NotIntersectingError, SetFamily, Witness
from generators.models import GenSpec
from generators.service import generate
from harness.experiment import build_grid, make_tasks, run_experiment
from harness.records import write_csv
from oracle.cover import min_cover_exact
from oracle.search import extremal_search

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_INVARIANT = 4

STDIN_PATH = "-"


def read_family(path: str) -> SetFamily:
    """Parse a family file; ``-`` reads standard input"""
    if path == STDIN_PATH:
        data = sys.stdin.buffer.read()
    else:
        data = Path(path).read_bytes()
    family = parse_family(data)
    logger.info(f"Loaded {len(family)} members (s={family.s}, n={family.n}) from {path}")
    return family


def _write_witness(family: SetFamily, witness: Witness, out: TextIO, verbose: bool) -> None:
    out.write(f"WITNESS: {witness}\n")
    if verbose:
        for index in witness.indices:
            out.write(f"# {index}: {family[index]}\n")


def cmd_gen(spec: GenSpec, out: TextIO) -> int:
    family = generate(spec)
    out.write(serialize_family(family))
    return EXIT_OK


def cmd_check(path: str, k: int, u: int, out: TextIO, verbose: bool = False) -> int:
    family = read_family(path)
    witness = find_witness(family, k, u)
    if witness is None:
        out.write("INTERSECTING\n")
        return EXIT_OK
    _write_witness(family, witness, out, verbose)
    return EXIT_NEGATIVE


def cmd_decompose(
    path: str,
    k: int,
    u: int,
    ell: int,
    out: TextIO,
    compact_parts: bool = False,
    verify: bool = False,
    output_format: str = "text",
    verbose: bool = False,
) -> int:
    """Decompose, optionally compact, and render.

    The header's ``verified`` flag always reflects a fresh verify_decomposition
    run; ``verify`` additionally turns a failed report into exit code 1.
    """
    family = read_family(path)
    params = BoundParams(s=family.s, k=k, u=u, ell=ell)
    try:
        decomposition = decompose(family, params)
    except NotIntersectingError as e:
        out.write("NOT INTERSECTING\n")
        _write_witness(family, e.witness, out, verbose)
        return EXIT_NEGATIVE

    if compact_parts:
        decomposition = compact(family, decomposition, ell, u)
    report = verify_decomposition(family, decomposition, ell, u, k=k)
    bound = theorem_bound(params)

    if output_format == "json":
        out.write(render_json(family, decomposition, params, bound, report, verbose))
    else:
        out.write(render_text(family, decomposition, bound, report.verified, verbose))

    if verify and not report.verified:
        logger.error(f"Decomposition failed verification: {report.to_dict()}")
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_oracle(path: str, ell: int, u: int, out: TextIO, cap: Optional[int] = None, verbose: bool = False) -> int:
    family = read_family(path)
    result = min_cover_exact(family, ell, u, cap=cap)
    out.write(f"minimum={result.minimum}\n")
    for i, part in enumerate(result.optimal_parts.parts):
        line = f"part {i}: " + " ".join(str(m) for m in part)
        if verbose:
            line += "  # " + " ".join(str(family[m]) for m in part)
        out.write(line + "\n")
    out.write(f"# explored={result.explored}\n")
    return EXIT_OK


def cmd_bound(s: int, k: int, u: int, ell: int, out: TextIO) -> int:
    out.write(f"{theorem_bound(BoundParams(s=s, k=k, u=u, ell=ell))}\n")
    return EXIT_OK


def cmd_experiment(
    s_values: Sequence[int],
    k_values: Sequence[int],
    n_values: Sequence[int],
    out: TextIO,
    u_values: Optional[Sequence[int]] = None,
    ell_values: Optional[Sequence[int]] = None,
    trials: int = 1,
    seed: int = 0,
    size: int = 12,
    oracle_cap: Optional[int] = None,
    timing: bool = True,
    workers: int = 1,
    out_path: Optional[str] = None,
    limits: Optional[Limits] = None,
) -> int:
    """Sweep the grid and emit CSV; exit 1 when any row failed verification"""
    limits = limits or Limits()
    if trials < 1 or size < 1 or workers < 1:
        raise DomainError(f"trials, size and workers must be >= 1, got {trials}, {size}, {workers}")
    points = build_grid(s_values, k_values, n_values, u_values, ell_values)
    if not points:
        logger.error("Experiment grid is empty after dropping inadmissible points")
        return EXIT_USAGE
    tasks = make_tasks(
        points,
        trials=trials,
        seed=seed,
        size=size,
        oracle_cap=limits.oracle_cap if oracle_cap is None else oracle_cap,
        timing=timing,
        limits=limits,
    )
    records, _ = run_experiment(tasks, workers=workers)

    if out_path is None:
        rows = write_csv(records, out)
    else:
        with open(out_path, "w", newline="") as f:
            rows = write_csv(records, f)
    logger.info(f"Wrote {rows} CSV row(s)")

    failed = sum(1 for r in records if not r.verified)
    if failed:
        logger.error(f"{failed} row(s) failed verification")
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_search(
    n: int,
    s: int,
    k: int,
    u: int,
    ell: int,
    out: TextIO,
    budget: Optional[int] = None,
    seed: int = 0,
    exhaustive: Optional[bool] = None,
    limits: Optional[Limits] = None,
) -> int:
    report = extremal_search(
        n,
        BoundParams(s=s, k=k, u=u, ell=ell),
        budget=budget,
        seed=seed,
        exhaustive=exhaustive,
        limits=limits,
    )
    out.write(f"best_value={report.best_value}\n")
    out.write(f"bound={report.bound}\n")
    out.write(f"mode={report.mode}\n")
    out.write(f"seed={report.seed}\n")
    out.write(f"families_examined={report.families_examined}\n")
    out.write(f"budget_exhausted={'true' if report.budget_exhausted else 'false'}\n")
    out.write(serialize_family(report.witness_family))
    return EXIT_OK

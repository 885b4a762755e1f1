"""Parameter-sweep experiments over generated (k,u)-intersecting families"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple

from checks.intersecting import is_intersecting, verify_decomposition
from config.settings import Limits
from decomposer.bound import theorem_bound
from decomposer.pipeline import decompose
from family.combinatorics import intersection_size
from family.models import BoundParams, SetFamily
from generators.random_family import gen_random
from generators.sampling import SEED_MAX, make_rng
from generators.stars import gen_scattered_stars
from harness.records import ExperimentRecord
from oracle.cover import min_cover_exact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridPoint:
    s: int
    k: int
    u: int
    ell: int
    n: int

    @property
    def params(self) -> BoundParams:
        return BoundParams(s=self.s, k=self.k, u=self.u, ell=self.ell)


@dataclass(frozen=True)
class TrialTask:
    """Everything one worker needs to produce one row"""
    point: GridPoint
    trial: int
    seed: int
    size: int
    oracle_cap: int
    retry_cap: int
    timing: bool


def build_grid(
    s_values: Sequence[int],
    k_values: Sequence[int],
    n_values: Sequence[int],
    u_values: Optional[Sequence[int]] = None,
    ell_values: Optional[Sequence[int]] = None,
) -> List[GridPoint]:
    """Cartesian grid in s, k, u, ell, n order, dropping inadmissible points.

    ``u_values`` defaults to 1..s and ``ell_values`` to 2..k-1 per point.
    """
    points: List[GridPoint] = []
    for s in s_values:
        for k in k_values:
            for u in (u_values if u_values is not None else range(1, s + 1)):
                for ell in (ell_values if ell_values is not None else range(2, k)):
                    for n in n_values:
                        if not (1 <= u <= s and 2 <= ell < k and n >= s):
                            logger.debug(f"Skipping inadmissible grid point s={s} k={k} u={u} ell={ell} n={n}")
                            continue
                        points.append(GridPoint(s=s, k=k, u=u, ell=ell, n=n))
    return points


def trial_seed(base: int, point_index: int, trial: int) -> int:
    """Deterministic per-row seed"""
    return (base * 1_000_003 + point_index * 10_007 + trial) % (SEED_MAX + 1)


def _scattered_family(task: TrialTask) -> Optional[SetFamily]:
    point = task.point
    stars = point.k - 1
    if point.k < 3 or point.n < stars * point.s:
        return None
    block = point.n // stars
    per_star = min(max(1, task.size // stars), comb(block - point.u, point.s - point.u))
    return gen_scattered_stars(point.n, point.s, point.u, point.k, per_star, task.seed)


def _extend_intersecting(family: SetFamily, task: TrialTask, target: int, seed: int) -> SetFamily:
    """Add random members one at a time, rejecting each that would create a violation"""
    point = task.point
    members = list(family.members)
    if len(members) >= target:
        return family
    present = set(members)
    pool = gen_random(point.n, point.s, min(comb(point.n, point.s), 4 * target), seed)
    for candidate in pool:
        if len(members) >= target:
            break
        if candidate in present:
            continue
        far = [m for m in members if intersection_size(m, candidate) < point.u]
        if point.k == 2:
            violates = bool(far)
        else:
            violates = len(far) >= point.k - 1 and not is_intersecting(
                SetFamily.build(far, s=point.s, n=point.n), point.k - 1, point.u
            )
        if not violates:
            members.append(candidate)
            present.add(candidate)
    return SetFamily.build(members, s=point.s, n=point.n)


def _filtered_random_family(task: TrialTask) -> Optional[SetFamily]:
    """Random families, shrinking by one member after each rejected draw.

    The target size is drawn from [cap // 2, cap]; an accepted draw below it is
    grown member by member so the corpus does not collapse to tiny families.
    """
    point = task.point
    rng = make_rng(task.seed)
    cap = max(1, min(task.size, comb(point.n, point.s)))
    target = rng.randint(max(1, cap // 2), cap)
    count = target
    for attempt in range(task.retry_cap):
        family = gen_random(point.n, point.s, count, rng.randrange(SEED_MAX + 1))
        if is_intersecting(family, point.k, point.u):
            return _extend_intersecting(family, task, target, rng.randrange(SEED_MAX + 1))
        logger.debug(f"Rejected random family of {count} members (attempt {attempt})")
        count = max(1, count - 1)
    return None


def build_family(task: TrialTask) -> Optional[SetFamily]:
    """Even trials use scattered stars when they fit, odd trials filtered random families"""
    if task.trial % 2 == 0:
        family = _scattered_family(task)
        if family is not None:
            return family
    return _filtered_random_family(task)


def run_trial(task: TrialTask) -> Optional[ExperimentRecord]:
    """Generate, decompose, verify and (within the cap) run the exact oracle"""
    point = task.point
    started = time.perf_counter()
    family = build_family(task)
    if family is None:
        logger.warning(
            f"Skipping row s={point.s} k={point.k} u={point.u} ell={point.ell} n={point.n} "
            f"trial={task.trial}: no (k,u)-intersecting family within {task.retry_cap} draws"
        )
        return None

    params = point.params
    bound = theorem_bound(params)
    decomposition = decompose(family, params)
    report = verify_decomposition(family, decomposition, point.ell, point.u, k=point.k)

    oracle_parts = None
    if len(family) <= task.oracle_cap:
        oracle_parts = min_cover_exact(family, point.ell, point.u, cap=task.oracle_cap).minimum

    kernel_size = decomposition.kernel_size or 0
    record = ExperimentRecord(
        s=point.s,
        k=point.k,
        u=point.u,
        ell=point.ell,
        n=point.n,
        family_size=len(family),
        kernel_size=kernel_size,
        constructive_parts=decomposition.part_count,
        oracle_parts=oracle_parts,
        bound=bound,
        verified=False,
        seed=task.seed,
        wall_ms=int((time.perf_counter() - started) * 1000) if task.timing else None,
    )
    verified = report.verified and kernel_size <= point.k - 1 and record.sandwich_holds()
    if not verified:
        logger.error(f"Row failed verification: {record.to_dict()} report={report.to_dict()}")
    return replace(record, verified=verified)


def make_tasks(
    points: Sequence[GridPoint],
    trials: int,
    seed: int,
    size: int,
    oracle_cap: int,
    timing: bool = True,
    limits: Optional[Limits] = None,
) -> List[TrialTask]:
    limits = limits or Limits()
    return [
        TrialTask(
            point=point,
            trial=trial,
            seed=trial_seed(seed, index, trial),
            size=size,
            oracle_cap=oracle_cap,
            retry_cap=limits.random_retry_cap,
            timing=timing,
        )
        for index, point in enumerate(points)
        for trial in range(trials)
    ]


def run_experiment(tasks: Sequence[TrialTask], workers: int = 1) -> Tuple[List[ExperimentRecord], int]:
    """Run every task; rows come back in grid-then-trial order.

    Returns:
        (records, skipped row count)
    """
    logger.info(f"Running {len(tasks)} trials with {workers} worker(s)")
    results: Iterable[Optional[ExperimentRecord]]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_trial, tasks))
    else:
        results = [run_trial(task) for task in tasks]

    records = [r for r in results if r is not None]
    skipped = len(tasks) - len(records)
    if skipped:
        logger.warning(f"{skipped} row(s) skipped")
    return records, skipped

"""Seeded corpus runs of the decomposition guarantee and the exact sandwich"""

from typing import List, Tuple

import pytest

from checks.intersecting import is_intersecting, verify_decomposition
from decomposer.bound import theorem_bound
from decomposer.pipeline import decompose
from family.models import BoundParams, SetFamily
from harness.experiment import GridPoint, build_family, make_tasks
from oracle.cover import min_cover_exact

Instance = Tuple[GridPoint, SetFamily]


def _corpus(size: int, trials: int, seed: int) -> List[Instance]:
    """(k,u)-intersecting families for s in 1..5, k in 3..5, every u and ell, n <= 14"""
    points = [
        GridPoint(s=s, k=k, u=u, ell=ell, n=n)
        for s in range(1, 6)
        for k in range(3, 6)
        for u in range(1, s + 1)
        for ell in range(2, k)
        for n in sorted({min(14, 2 * s + 1), 14})
    ]
    corpus = []
    for task in make_tasks(points, trials=trials, seed=seed, size=size, oracle_cap=size):
        family = build_family(task)
        if family is not None:
            corpus.append((task.point, family))
    return corpus


@pytest.fixture(scope="module")
def theorem_corpus() -> List[Instance]:
    return _corpus(size=40, trials=3, seed=17)


@pytest.fixture(scope="module")
def sandwich_corpus() -> List[Instance]:
    return _corpus(size=14, trials=1, seed=29)


def test_corpus_is_large_enough(theorem_corpus, sandwich_corpus):
    assert len(theorem_corpus) >= 500
    assert len(sandwich_corpus) >= 100
    assert all(len(f) <= 40 for _, f in theorem_corpus)


def test_corpus_exercises_merging(theorem_corpus):
    # u = s and s = 1 points cap families at k-1 members; the rest must not
    sizable = [(point, f) for point, f in theorem_corpus if len(f) >= 8]
    assert len(sizable) >= 90
    multi_part = [f for point, f in sizable if decompose(f, point.params).part_count >= 2]
    assert len(multi_part) >= 60


def test_decomposition_guarantee(theorem_corpus):
    violations = []
    for point, family in theorem_corpus:
        assert is_intersecting(family, point.k, point.u)
        d = decompose(family, point.params)
        report = verify_decomposition(family, d, point.ell, point.u, k=point.k)
        bound = theorem_bound(point.params)
        if not (report.verified and d.part_count <= bound and d.kernel_size <= point.k - 1):
            violations.append((point, family.to_dict(), report.to_dict()))
    assert violations == []


def test_sandwich(sandwich_corpus):
    for point, family in sandwich_corpus:
        assert len(family) <= 14
        constructive = decompose(family, point.params).part_count
        exact = min_cover_exact(family, point.ell, point.u).minimum
        assert exact <= constructive <= theorem_bound(point.params), (point, family.to_dict())


def test_bound_is_not_trivially_loose_for_scattered_stars():
    # k-1 far stars need ceil((k-1)/(ell-1)) parts exactly
    for k in range(3, 6):
        for ell in range(2, k):
            family = SetFamily.build(
                [[10 * star, 10 * star + j] for star in range(k - 1) for j in range(1, 3)]
            )
            p = BoundParams(s=2, k=k, u=1, ell=ell)
            assert min_cover_exact(family, ell, 1).minimum == -(-(k - 1) // (ell - 1))
            assert decompose(family, p).part_count <= theorem_bound(p)

"""Extremal search: pinned exhaustive values and randomized-mode contracts"""

import pytest

from checks.intersecting import is_intersecting
from config.settings import Limits
from decomposer.bound import theorem_bound
from family.models import BoundParams, CapacityError, DomainError
from oracle.cover import min_cover_exact
from oracle.search import EXHAUSTIVE, RANDOMIZED, extremal_search

P = BoundParams(s=2, k=3, u=1, ell=2)


class TestExhaustive:
    @pytest.mark.parametrize("n,expected", [(2, 1), (3, 1), (4, 2), (5, 3)])
    def test_pinned_values(self, n, expected):
        report = extremal_search(n, P, exhaustive=True)
        assert report.mode == EXHAUSTIVE
        assert report.best_value == expected
        assert not report.budget_exhausted
        assert report.best_value <= theorem_bound(P) == 4

    def test_single_member_universe(self):
        report = extremal_search(2, P, exhaustive=True)
        assert [m.elements for m in report.witness_family] == [(0, 1)]

    def test_witness_certifies_value(self):
        report = extremal_search(5, P, exhaustive=True)
        family = report.witness_family
        assert is_intersecting(family, P.k, P.u)
        assert min_cover_exact(family, P.ell, P.u).minimum == report.best_value

    def test_budget_cut(self):
        report = extremal_search(4, BoundParams(s=2, k=3, u=2, ell=2), exhaustive=True, budget=3)
        assert report.budget_exhausted

    def test_isomorphic_maximal_families_evaluated_once(self):
        # maximal families are the pairs of edges of K4: adjacent or disjoint
        p = BoundParams(s=2, k=3, u=2, ell=2)
        report = extremal_search(4, p, exhaustive=True)
        assert not report.budget_exhausted
        assert report.families_examined == 2
        assert report.best_value == 2 == theorem_bound(p)

    def test_triples_on_six_points_complete(self):
        p = BoundParams(s=3, k=3, u=1, ell=2)
        report = extremal_search(6, p, exhaustive=True)
        assert not report.budget_exhausted
        assert len(report.witness_family) == 20
        assert report.best_value == 2

    @pytest.mark.parametrize("k,u,ell", [(4, 2, 2), (4, 2, 3)])
    def test_six_point_triples_within_default_budget(self, k, u, ell):
        p = BoundParams(s=3, k=k, u=u, ell=ell)
        report = extremal_search(6, p, exhaustive=True)
        assert not report.budget_exhausted
        assert is_intersecting(report.witness_family, k, u)
        assert 1 <= report.best_value <= theorem_bound(p)

    def test_too_large(self):
        with pytest.raises(CapacityError):
            extremal_search(8, P, exhaustive=True)

    def test_ground_set_too_small(self):
        with pytest.raises(DomainError):
            extremal_search(1, P)


class TestRandomized:
    def test_reproducible(self):
        limits = Limits(oracle_cap=10)
        first = extremal_search(7, P, budget=400, seed=3, exhaustive=False, limits=limits)
        second = extremal_search(7, P, budget=400, seed=3, exhaustive=False, limits=limits)
        assert first.mode == RANDOMIZED
        assert first.to_dict() == second.to_dict()

    def test_within_bound_and_certified(self):
        p = BoundParams(s=2, k=4, u=1, ell=2)
        report = extremal_search(8, p, budget=300, seed=1, limits=Limits(oracle_cap=10))
        assert report.mode == RANDOMIZED
        assert 1 <= report.best_value <= theorem_bound(p)
        assert is_intersecting(report.witness_family, p.k, p.u)
        assert min_cover_exact(report.witness_family, p.ell, p.u).minimum == report.best_value

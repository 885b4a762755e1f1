"""Bounded search for (k,u)-intersecting families with large minimum covers

Any single family certifies a lower bound on the extremal number for its
parameters, so every reported value is a lower-bound probe, never the
extremal number itself.

The minimum cover never decreases when members are added, so the maximum
over all (k,u)-intersecting families on [0, n) is attained on a maximal one.
Exhaustive mode enumerates exactly those and calls the oracle once per
isomorphism class; randomized mode hill-climbs over greedy maximal fills.
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

from checks.graph import DisjointnessGraph, iter_bits
from config.settings import Limits
from decomposer.bound import theorem_bound
from family.models import (
    BoundParams, CapacityError, DomainError, InvariantViolation, MemberSet, SetFamily
)
from oracle.canonical import canonical_form
from oracle.cover import min_cover_exact
from oracle.models import SearchReport

logger = logging.getLogger(__name__)

EXHAUSTIVE = "exhaustive"
RANDOMIZED = "randomized"


@dataclass
class _SearchState:
    """Universe of candidate members and the running best"""
    n: int
    params: BoundParams
    limits: Limits
    universe: List[MemberSet]
    graph: DisjointnessGraph
    best_value: int = -1
    best_mask: int = 0
    examined: int = 0
    spent: int = 0
    values: Dict[Tuple[int, ...], int] = field(default_factory=dict)

    def can_add(self, mask: int, index: int) -> bool:
        """Adding universe member ``index`` keeps the family (k,u)-intersecting"""
        return not self.graph.has_clique(
            self.params.k - 1, within=mask & self.graph.adjacency[index]
        )

    def family(self, mask: int) -> SetFamily:
        return SetFamily(
            s=self.params.s,
            n=self.n,
            members=tuple(self.universe[i] for i in iter_bits(mask)),
        )

    def evaluate(self, mask: int) -> int:
        members = [self.universe[i].elements for i in iter_bits(mask)]
        key = canonical_form(members, self.limits.canonical_permutation_limit)
        cached = self.values.get(key)
        if cached is not None:
            self.spent += 1
            return cached
        result = min_cover_exact(self.family(mask), self.params.ell, self.params.u, self.limits.oracle_cap)
        self.values[key] = result.minimum
        self.examined += 1
        self.spent += result.explored + 1
        if result.minimum > self.best_value:
            self.best_value = result.minimum
            self.best_mask = mask
            logger.info(f"New best {result.minimum} with {len(members)} members")
        return result.minimum


def _exhaustive(state: _SearchState, budget: int) -> bool:
    """Enumerate maximal families as complements of minimal k-clique transversals.

    Each node removes one vertex of an unhit k-clique; vertices of that clique
    tried earlier are kept for good, so every transversal is reached once.
    Returns True when the budget ran out.
    """
    graph = state.graph
    k = state.params.k
    exhausted = False

    def blocked(members: int, excluded: int) -> bool:
        return all(not state.can_add(members, i) for i in iter_bits(excluded))

    def visit(members: int, kept: int) -> None:
        nonlocal exhausted
        if exhausted:
            return
        if state.spent >= budget:
            exhausted = True
            return
        state.spent += 1
        # Removing more members only makes excluded ones easier to add back
        if not blocked(members, graph.vertex_mask & ~members):
            return
        if graph.has_clique(k, within=kept):
            return
        clique = graph.least_clique(k, within=members)
        if clique is None:
            state.evaluate(members)
            return
        for v in clique:
            if kept >> v & 1:
                continue
            visit(members & ~(1 << v), kept)
            kept |= 1 << v

    visit(graph.vertex_mask, 0)
    return exhausted


def _random_fill(state: _SearchState, mask: int, rng: random.Random) -> int:
    order = list(range(len(state.universe)))
    rng.shuffle(order)
    for index in order:
        if mask.bit_count() >= state.limits.oracle_cap:
            break
        if not mask >> index & 1 and state.can_add(mask, index):
            mask |= 1 << index
    return mask


def _randomized(state: _SearchState, budget: int, rng: random.Random) -> bool:
    restarts = 0
    while state.spent < budget:
        restarts += 1
        current = _random_fill(state, 0, rng)
        value = state.evaluate(current)
        stale = 0
        while stale < state.limits.stale_rounds and state.spent < budget:
            dropped = rng.choice(list(iter_bits(current)))
            candidate = _random_fill(state, current & ~(1 << dropped), rng)
            candidate_value = state.evaluate(candidate)
            if candidate_value > value:
                current, value, stale = candidate, candidate_value, 0
            else:
                if candidate_value == value:
                    current = candidate
                stale += 1
    logger.info(f"Randomized search used {restarts} restarts")
    return True


def extremal_search(
    n: int,
    p: BoundParams,
    budget: Optional[int] = None,
    seed: int = 0,
    exhaustive: Optional[bool] = None,
    limits: Optional[Limits] = None,
) -> SearchReport:
    """Search (k,u)-intersecting s-uniform families on [0, n) maximizing the exact minimum cover.

    ``exhaustive=None`` picks exhaustive mode when C(n,s) fits ``limits.exhaustive_limit``.

    Raises:
        DomainError: n < s
        CapacityError: exhaustive mode requested above the limit
        InvariantViolation: a value above theorem_bound(p)
    """
    limits = limits or Limits()
    budget = limits.search_budget if budget is None else budget
    if n < p.s:
        raise DomainError(f"ground set of size {n} has no {p.s}-subsets")
    universe_size = comb(n, p.s)
    if exhaustive is None:
        exhaustive = universe_size <= limits.exhaustive_limit
    if exhaustive and universe_size > limits.exhaustive_limit:
        raise CapacityError(
            f"exhaustive search over C({n},{p.s})={universe_size} members exceeds limit {limits.exhaustive_limit}"
        )

    universe = [MemberSet(c) for c in combinations(range(n), p.s)]
    graph = DisjointnessGraph.from_bitsets(SetFamily(s=p.s, n=n, members=tuple(universe)).bitsets, p.u)
    state = _SearchState(n=n, params=p, limits=limits, universe=universe, graph=graph)
    bound = theorem_bound(p)
    mode = EXHAUSTIVE if exhaustive else RANDOMIZED
    logger.info(f"Extremal search: n={n} params={p.to_dict()} mode={mode} universe={universe_size}")

    if exhaustive:
        budget_exhausted = _exhaustive(state, budget)
    else:
        budget_exhausted = _randomized(state, budget, random.Random(seed))

    if state.best_value > bound:
        logger.error(f"Search value {state.best_value} exceeds bound {bound}")
        raise InvariantViolation(f"found minimum cover {state.best_value} above bound {bound}")

    return SearchReport(
        best_value=max(state.best_value, 0),
        witness_family=state.family(state.best_mask),
        families_examined=state.examined,
        budget_exhausted=budget_exhausted,
        seed=seed,
        mode=mode,
        nodes=state.spent,
        bound=bound,
    )

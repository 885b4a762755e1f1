"""Exact minimum partition into (ell,u)-intersecting parts by branch and bound

A part is (ell,u)-intersecting iff its vertices span no ell-clique of the
disjointness graph. Covers and partitions have the same minimum because
removing members from a part keeps it (ell,u)-intersecting, so only
partitions are searched.
"""

import logging
from typing import Dict, List, Optional

from checks.graph import DisjointnessGraph
from checks.intersecting import disjointness_graph
from config.settings import Limits
from decomposer.models import Decomposition
from decomposer.pipeline import decompose
from family.models import (
    BoundParams, CapacityError, DomainError, InvariantViolation, SetFamily
)
from oracle.models import OracleResult

logger = logging.getLogger(__name__)


class _PartitionSearch:
    """Branch and bound over vertex-to-part assignments"""

    def __init__(self, graph: DisjointnessGraph, ell: int):
        self.graph = graph
        self.ell = ell
        self.explored = 0
        self._feasible: Dict[int, bool] = {}

    def fits(self, part_mask: int, v: int) -> bool:
        """Adding v keeps the part free of ell-cliques"""
        touched = part_mask & self.graph.adjacency[v]
        if self.ell == 2:
            return touched == 0
        cached = self._feasible.get(touched)
        if cached is None:
            cached = not self.graph.has_clique(self.ell - 1, within=touched)
            self._feasible[touched] = cached
        return cached

    def minimum(self, order: List[int], upper: int, lower: int) -> int:
        """Smallest part count below ``upper``, or ``upper`` when none is smaller"""
        best = upper
        parts: List[int] = []

        def branch(position: int) -> bool:
            nonlocal best
            self.explored += 1
            if len(parts) >= best:
                return False
            if position == len(order):
                best = len(parts)
                return best <= lower
            v = order[position]
            bit = 1 << v
            for i, mask in enumerate(parts):
                if self.fits(mask, v):
                    parts[i] = mask | bit
                    done = branch(position + 1)
                    parts[i] = mask
                    if done:
                        return True
            if len(parts) + 1 < best:
                parts.append(bit)
                done = branch(position + 1)
                parts.pop()
                if done:
                    return True
            return False

        branch(0)
        return best

    def least_assignment(self, limit: int) -> Optional[List[List[int]]]:
        """Lexicographically least restricted-growth assignment with at most ``limit`` parts"""
        order = self.graph.order
        parts: List[int] = []
        members: List[List[int]] = []

        def branch(v: int) -> bool:
            self.explored += 1
            if v == order:
                return True
            bit = 1 << v
            for i, mask in enumerate(parts):
                if self.fits(mask, v):
                    parts[i] = mask | bit
                    members[i].append(v)
                    if branch(v + 1):
                        return True
                    parts[i] = mask
                    members[i].pop()
            if len(parts) < limit:
                parts.append(bit)
                members.append([v])
                if branch(v + 1):
                    return True
                parts.pop()
                members.pop()
            return False

        return members if branch(0) else None


def _initial_upper(family: SetFamily, ell: int, u: int, omega: int) -> int:
    # Every family is (omega+1,u)-intersecting, so the constructive pipeline applies.
    if ell > omega:
        return 1
    params = BoundParams(s=family.s, k=omega + 1, u=u, ell=ell)
    return decompose(family, params).part_count


def min_cover_exact(
    family: SetFamily,
    ell: int,
    u: int,
    cap: Optional[int] = None,
) -> OracleResult:
    """Exact minimum number of (ell,u)-intersecting parts covering the family.

    Raises:
        CapacityError: family larger than the cap (never approximated)
        DomainError: ell < 2 or u outside [1, s]
    """
    cap = Limits().oracle_cap if cap is None else cap
    if ell < 2:
        raise DomainError(f"ell must be >= 2, got {ell}")
    if len(family) > cap:
        raise CapacityError(f"family has {len(family)} members, oracle cap is {cap}")

    graph = disjointness_graph(family, u)
    if graph.order == 0:
        return OracleResult(minimum=0, optimal_parts=Decomposition(parts=()), explored=0)

    omega = graph.clique_number()
    lower = -(-omega // (ell - 1))
    upper = _initial_upper(family, ell, u, omega)

    search = _PartitionSearch(graph, ell)
    order = list(reversed(graph.degeneracy_order()))
    minimum = upper if upper <= lower else search.minimum(order, upper, lower)

    parts = search.least_assignment(minimum)
    if parts is None:
        raise InvariantViolation(f"no partition into {minimum} parts although one was found")
    logger.debug(
        f"Oracle: members={graph.order} ell={ell} u={u} omega={omega} "
        f"minimum={minimum} explored={search.explored}"
    )
    return OracleResult(
        minimum=minimum,
        optimal_parts=Decomposition(parts=tuple(tuple(p) for p in parts)),
        explored=search.explored,
    )

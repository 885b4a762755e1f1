"""Exact chromatic number by k-colorability backtracking

Kept independent of the partition search in ``oracle.cover``: colors are
tested in increasing k from a greedy clique bound, vertices are taken in
DSATUR order, and colour classes are bitmasks.
"""

import logging
from typing import List, Optional

from checks.graph import DisjointnessGraph, iter_bits
from config.settings import Limits
from family.models import CapacityError

logger = logging.getLogger(__name__)


def _greedy_clique(graph: DisjointnessGraph) -> int:
    best = 0
    for start in range(graph.order):
        clique = 1
        candidates = graph.adjacency[start]
        while candidates:
            v = max(iter_bits(candidates), key=lambda w: (graph.adjacency[w] & candidates).bit_count())
            clique += 1
            candidates &= graph.adjacency[v]
        best = max(best, clique)
    return best


def _colorable(graph: DisjointnessGraph, colors: int) -> bool:
    classes: List[int] = []
    assigned = 0
    full = graph.vertex_mask

    def saturation(v: int) -> int:
        return sum(1 for c in classes if c & graph.adjacency[v])

    def extend() -> bool:
        nonlocal assigned
        if assigned == full:
            return True
        v = max(
            iter_bits(full & ~assigned),
            key=lambda w: (saturation(w), graph.degree(w), -w),
        )
        bit = 1 << v
        assigned |= bit
        for i, members in enumerate(classes):
            if not members & graph.adjacency[v]:
                classes[i] = members | bit
                if extend():
                    return True
                classes[i] = members
        if len(classes) < colors:
            classes.append(bit)
            if extend():
                return True
            classes.pop()
        assigned &= ~bit
        return False

    return extend()


def chromatic_number(graph: DisjointnessGraph, cap: Optional[int] = None) -> int:
    """Exact chromatic number; 0 for the empty graph.

    Raises:
        CapacityError: graph order above the cap
    """
    cap = Limits().oracle_cap if cap is None else cap
    if graph.order > cap:
        raise CapacityError(f"graph has {graph.order} vertices, oracle cap is {cap}")
    if graph.order == 0:
        return 0
    colors = _greedy_clique(graph)
    while not _colorable(graph, colors):
        colors += 1
    logger.debug(f"Chromatic number of {graph.order}-vertex graph: {colors}")
    return colors

"""Disjointness graph on family members with bitset clique search"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(indices: Sequence[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class DisjointnessGraph:
    """Graph on member indices; i ~ j iff |member_i ∩ member_j| < u.

    ``adjacency[i]`` is the neighbourhood of vertex i as a bitmask.
    """
    order: int
    adjacency: Tuple[int, ...]

    @classmethod
    def from_bitsets(cls, bitsets: Sequence[int], u: int) -> "DisjointnessGraph":
        order = len(bitsets)
        adjacency = [0] * order
        for i in range(order):
            row = bitsets[i]
            for j in range(i + 1, order):
                if (row & bitsets[j]).bit_count() < u:
                    adjacency[i] |= 1 << j
                    adjacency[j] |= 1 << i
        return cls(order=order, adjacency=tuple(adjacency))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (i, j) with i < j, in lexicographic order"""
        return [
            (i, j)
            for i in range(self.order)
            for j in iter_bits(self.adjacency[i] >> (i + 1) << (i + 1))
        ]

    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(self.order)) // 2

    def degeneracy_order(self, within: Optional[int] = None) -> List[int]:
        """Repeatedly remove a minimum-degree vertex (lowest index on ties)"""
        remaining = self.vertex_mask if within is None else within
        order: List[int] = []
        while remaining:
            best = min(
                iter_bits(remaining),
                key=lambda v: ((self.adjacency[v] & remaining).bit_count(), v),
            )
            order.append(best)
            remaining &= ~(1 << best)
        return order

    def _pivot(self, candidates: int, excluded: int) -> int:
        return max(
            iter_bits(candidates | excluded),
            key=lambda v: (self.adjacency[v] & candidates).bit_count(),
        )

    def _reaches(self, size: int, candidates: int, excluded: int, target: int) -> bool:
        # Bron-Kerbosch with pivoting, stopping at the first clique of `target` vertices
        if size >= target:
            return True
        if not candidates or size + candidates.bit_count() < target:
            return False
        pivot = self._pivot(candidates, excluded)
        for v in iter_bits(candidates & ~self.adjacency[pivot]):
            neighbours = self.adjacency[v]
            if self._reaches(size + 1, candidates & neighbours, excluded & neighbours, target):
                return True
            candidates &= ~(1 << v)
            excluded |= 1 << v
        return False

    def has_clique(self, size: int, within: Optional[int] = None) -> bool:
        """True iff the subgraph induced by ``within`` has a clique of ``size`` vertices"""
        mask = self.vertex_mask if within is None else within
        if size <= 0:
            return True
        if mask.bit_count() < size:
            return False
        if size == 1:
            return True
        later = mask
        for v in self.degeneracy_order(mask):
            later &= ~(1 << v)
            neighbours = self.adjacency[v]
            if self._reaches(1, neighbours & later, neighbours & mask & ~later, size):
                return True
        return False

    def clique_number(self, within: Optional[int] = None) -> int:
        """Exact size of a maximum clique in the induced subgraph"""
        mask = self.vertex_mask if within is None else within
        best = 1 if mask else 0

        def expand(size: int, candidates: int, excluded: int) -> None:
            nonlocal best
            if not candidates:
                best = max(best, size)
                return
            if size + candidates.bit_count() <= best:
                return
            pivot = self._pivot(candidates, excluded)
            for v in iter_bits(candidates & ~self.adjacency[pivot]):
                neighbours = self.adjacency[v]
                expand(size + 1, candidates & neighbours, excluded & neighbours)
                candidates &= ~(1 << v)
                excluded |= 1 << v

        later = mask
        for v in self.degeneracy_order(mask):
            later &= ~(1 << v)
            neighbours = self.adjacency[v]
            expand(1, neighbours & later, neighbours & mask & ~later)
        return best

    def least_clique(self, size: int, within: Optional[int] = None) -> Optional[Tuple[int, ...]]:
        """Lexicographically least increasing index tuple forming a clique"""
        mask = self.vertex_mask if within is None else within

        def search(chosen: Tuple[int, ...], candidates: int, need: int) -> Optional[Tuple[int, ...]]:
            if need == 0:
                return chosen
            for v in iter_bits(candidates):
                if candidates.bit_count() < need:
                    return None
                above = candidates >> (v + 1) << (v + 1)
                found = search(chosen + (v,), above & self.adjacency[v], need - 1)
                if found is not None:
                    return found
                candidates &= ~(1 << v)
            return None

        if size <= 0:
            return ()
        return search((), mask, size)

    def to_dict(self) -> Dict[str, object]:
        return {"order": self.order, "edges": [list(e) for e in self.edges()]}

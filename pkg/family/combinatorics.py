"""Set algebra and counting utilities over family members"""

import math
from itertools import combinations
from typing import List

from family.models import DomainError, MemberSet

# Counts leave the process as unsigned 64-bit integers (CSV, JSON).
MAX_COUNT = 2**64 - 1


def intersection_size(a: MemberSet, b: MemberSet) -> int:
    """|a ∩ b| as the popcount of both members over their joint labels"""
    index = {label: position for position, label in enumerate(sorted(set(a.elements) | set(b.elements)))}
    return (a.mask(index) & b.mask(index)).bit_count()


def u_subsets(member: MemberSet, u: int) -> List[MemberSet]:
    """All u-element subsets of a member, in lexicographic order"""
    if u < 1 or u > member.size:
        raise DomainError(f"u must satisfy 1 <= u <= {member.size}, got {u}")
    return [MemberSet(combo) for combo in combinations(member.elements, u)]


def binomial(s: int, u: int) -> int:
    """Exact C(s, u); 0 when u > s"""
    if s < 0 or u < 0:
        raise DomainError(f"binomial needs non-negative arguments, got ({s}, {u})")
    value = math.comb(s, u)
    if value > MAX_COUNT:
        raise OverflowError(f"C({s},{u}) exceeds the 64-bit count range")
    return value


def unrank_subset(rank: int, n: int, s: int) -> List[int]:
    """The rank-th s-subset of [0, n) in lexicographic order"""
    total = math.comb(n, s)
    if not 0 <= rank < total:
        raise DomainError(f"rank {rank} outside [0, C({n},{s})={total})")
    chosen: List[int] = []
    element = 0
    remaining = s
    while remaining:
        # subsets starting with `element` at this position
        block = math.comb(n - element - 1, remaining - 1)
        if rank < block:
            chosen.append(element)
            remaining -= 1
        else:
            rank -= block
        element += 1
    return chosen

"""Seeded sampling of distinct subsets

All randomness comes from ``random.Random(seed)`` (Mersenne Twister, seeded
with the 64-bit integer seed) through ``randrange`` only, which is stable
across platforms. Distinct subsets are drawn as distinct lexicographic ranks
with Floyd's algorithm and then unranked.
"""

import random
from math import comb
from typing import List

from family.combinatorics import unrank_subset
from family.models import DomainError

SEED_MAX = 2**64 - 1


def make_rng(seed: int) -> random.Random:
    if not 0 <= seed <= SEED_MAX:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return random.Random(seed)


def floyd_sample(total: int, count: int, rng: random.Random) -> List[int]:
    """``count`` distinct integers from [0, total), sorted"""
    if count < 0 or count > total:
        raise DomainError(f"cannot draw {count} distinct values from {total}")
    chosen = set()
    for j in range(total - count, total):
        t = rng.randrange(j + 1)
        chosen.add(j if t in chosen else t)
    return sorted(chosen)


def sample_subsets(n: int, s: int, count: int, rng: random.Random) -> List[List[int]]:
    """``count`` distinct s-subsets of [0, n), in lexicographic order"""
    total = comb(n, s)
    return [unrank_subset(rank, n, s) for rank in floyd_sample(total, count, rng)]

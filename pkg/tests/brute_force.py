"""Naive reference implementations used to cross-check the exact searches"""

from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from family.models import SetFamily


def pairwise_far(family: SetFamily, indices: Sequence[int], u: int) -> bool:
    """All chosen members pairwise share fewer than u elements"""
    return all(
        len(set(family[i].elements) & set(family[j].elements)) < u
        for i, j in combinations(indices, 2)
    )


def naive_witness(family: SetFamily, k: int, u: int) -> Optional[Tuple[int, ...]]:
    """First k-tuple of indices in lexicographic order that is pairwise far"""
    for combo in combinations(range(len(family)), k):
        if pairwise_far(family, combo, u):
            return combo
    return None


def naive_is_intersecting(family: SetFamily, k: int, u: int) -> bool:
    return naive_witness(family, k, u) is None


def set_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    """Every partition of ``items`` (Bell-number many)"""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]
        yield [[first]] + partition


def brute_min_cover(family: SetFamily, ell: int, u: int) -> int:
    """Minimum part count over all partitions whose parts are (ell,u)-intersecting"""
    if len(family) == 0:
        return 0
    ok: Dict[Tuple[int, ...], bool] = {}

    def part_ok(part: List[int]) -> bool:
        key = tuple(sorted(part))
        if key not in ok:
            ok[key] = naive_witness(family.subfamily(key), ell, u) is None
        return ok[key]

    best = len(family)
    for partition in set_partitions(list(range(len(family)))):
        if len(partition) < best and all(part_ok(p) for p in partition):
            best = len(partition)
    return best

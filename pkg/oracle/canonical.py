"""Canonical form of a family under permutations of the ground set

The form is the lexicographically least sorted tuple of member bitmasks over
all relabelings that list elements by decreasing degree. Elements of equal
degree are permuted exhaustively, so isomorphic families get equal forms.
"""

import logging
from itertools import permutations, product
from math import factorial, prod
from typing import Dict, List, Sequence, Tuple

logger = logging.getLogger(__name__)

CanonicalForm = Tuple[int, ...]


def _degree_classes(members: Sequence[Tuple[int, ...]]) -> List[List[int]]:
    degree: Dict[int, int] = {}
    for member in members:
        for element in member:
            degree[element] = degree.get(element, 0) + 1
    grouped: Dict[int, List[int]] = {}
    for element, d in degree.items():
        grouped.setdefault(d, []).append(element)
    return [sorted(grouped[d]) for d in sorted(grouped, reverse=True)]


def canonical_form(members: Sequence[Tuple[int, ...]], permutation_limit: int) -> CanonicalForm:
    """Relabeling-invariant key; falls back to the raw form above ``permutation_limit``"""
    classes = _degree_classes(members)
    if prod(factorial(len(c)) for c in classes) > permutation_limit:
        logger.debug("Canonical form skipped: too many relabelings")
        return tuple(sorted(sum(1 << e for e in member) for member in members))

    best: CanonicalForm = ()
    for choice in product(*(permutations(c) for c in classes)):
        label: Dict[int, int] = {}
        for block in choice:
            for element in block:
                label[element] = len(label)
        form = tuple(sorted(sum(1 << label[e] for e in member) for member in members))
        if not best or form < best:
            best = form
    return best

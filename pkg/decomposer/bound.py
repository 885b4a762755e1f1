"""Closed-form upper bound on the number of (ell,u)-intersecting parts"""

from family.combinatorics import MAX_COUNT, binomial
from family.models import BoundParams


def theorem_bound(p: BoundParams) -> int:
    """ceil((k-1) * C(s,u) / (ell-1)) in exact integer arithmetic"""
    numerator = (p.k - 1) * binomial(p.s, p.u)
    value = -(-numerator // (p.ell - 1))
    if value > MAX_COUNT:
        raise OverflowError(f"bound for {p} exceeds the 64-bit count range")
    return value

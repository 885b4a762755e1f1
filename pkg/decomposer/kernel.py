"""Scattered kernel and trace cover of a family"""

import logging
from typing import Dict, List

from decomposer.models import Kernel, TraceCover
from family.combinatorics import u_subsets
from family.models import DomainError, KernelCoverageError, MemberSet, SetFamily

logger = logging.getLogger(__name__)


def scattered_kernel(family: SetFamily, u: int) -> Kernel:
    """Greedy maximal subfamily whose members pairwise share fewer than u elements.

    Members are scanned in canonical order; a member joins iff it is far from
    every member already chosen. Maximality means every member shares at least
    u elements with some kernel member.
    """
    if not 1 <= u <= family.s:
        raise DomainError(f"u must satisfy 1 <= u <= s={family.s}, got {u}")
    chosen: List[int] = []
    chosen_bits: List[int] = []
    for index, bits in enumerate(family.bitsets):
        if all((bits & other).bit_count() < u for other in chosen_bits):
            chosen.append(index)
            chosen_bits.append(bits)
    logger.debug(f"Scattered kernel: m={len(chosen)} of {len(family)} members")
    return Kernel(indices=tuple(chosen))


def trace_cover(family: SetFamily, kernel: Kernel, u: int) -> TraceCover:
    """Assign each member to the first trace X (canonical order) with X ⊆ member.

    Traces are the deduplicated u-subsets of all kernel members.

    Raises:
        KernelCoverageError: some member contains no trace (kernel not maximal)
    """
    unique: Dict[MemberSet, None] = {}
    for index in kernel.indices:
        for subset in u_subsets(family[index], u):
            unique.setdefault(subset, None)
    traces = tuple(sorted(unique, key=lambda t: t.elements))

    assignment: List[int] = []
    for index, member in enumerate(family.members):
        for trace_index, trace in enumerate(traces):
            if trace.issubset(member):
                assignment.append(trace_index)
                break
        else:
            raise KernelCoverageError(f"member {index} {member} contains no kernel trace")
    return TraceCover(traces=traces, assignment=tuple(assignment))

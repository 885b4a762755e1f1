"""Constructive decomposition: kernel -> trace cover -> pigeonhole merge"""

import logging
from typing import List, Tuple

from checks.graph import bits_of
from checks.intersecting import disjointness_graph, find_witness, verify_decomposition
from decomposer.bound import theorem_bound
from decomposer.kernel import scattered_kernel, trace_cover
from decomposer.models import Decomposition, TraceCover
from family.models import (
    BoundParams, DomainError, InvariantViolation, MemberSet, NotIntersectingError,
    SetFamily, StructureError
)

logger = logging.getLogger(__name__)


def pigeonhole_merge(cover: TraceCover, ell: int) -> Decomposition:
    """Union consecutive blocks of at most ell-1 nonempty trace parts.

    Each trace part is (2,u)-intersecting, so a union of ell-1 of them is
    (ell,u)-intersecting.
    """
    if ell < 2:
        raise DomainError(f"ell must be >= 2, got {ell}")
    block = ell - 1
    trace_parts = cover.trace_parts()
    parts: List[Tuple[int, ...]] = []
    labels: List[Tuple[MemberSet, ...]] = []
    for start in range(0, len(trace_parts), block):
        group = trace_parts[start:start + block]
        parts.append(tuple(i for _, members in group for i in members))
        labels.append(tuple(trace for trace, _ in group))
    return Decomposition(parts=tuple(parts), labels=tuple(labels), trace_count=len(cover.traces))


def decompose(family: SetFamily, p: BoundParams) -> Decomposition:
    """Split a (k,u)-intersecting family into at most theorem_bound(p) parts.

    Raises:
        NotIntersectingError: the family has k pairwise-far members
        DomainError: parameters do not fit the family
    """
    if p.s != family.s:
        raise DomainError(f"parameters are for s={p.s}, family has s={family.s}")
    witness = find_witness(family, p.k, p.u)
    if witness is not None:
        raise NotIntersectingError(witness, p.k, p.u)

    kernel = scattered_kernel(family, p.u)
    if kernel.m > p.k - 1:
        raise InvariantViolation(f"kernel of size {kernel.m} in a ({p.k},{p.u})-intersecting family")
    cover = trace_cover(family, kernel, p.u)
    bound = theorem_bound(p)
    result = pigeonhole_merge(cover, p.ell).with_metadata(bound=bound, kernel_size=kernel.m)

    if result.part_count > min(len(family), bound):
        raise InvariantViolation(f"{result.part_count} parts exceed bound {bound}")
    logger.info(
        f"Decomposed {len(family)} members: kernel={kernel.m} traces={len(cover.traces)} "
        f"parts={result.part_count} bound={bound}"
    )
    return result


def compact(family: SetFamily, decomposition: Decomposition, ell: int, u: int) -> Decomposition:
    """Greedily merge later parts into earlier ones while parts stay (ell,u)-intersecting.

    Raises:
        StructureError: the input decomposition does not verify
    """
    report = verify_decomposition(family, decomposition, ell, u)
    if not (report.covers and report.disjoint and report.parts_ok):
        raise StructureError(f"cannot compact an unverified decomposition: {report.to_dict()}")

    graph = disjointness_graph(family, u)
    merged_parts: List[List[int]] = []
    merged_masks: List[int] = []
    merged_labels: List[List[MemberSet]] = []
    for part, label in zip(decomposition.parts, decomposition.labels):
        mask = bits_of(part)
        for i, existing in enumerate(merged_masks):
            if not graph.has_clique(ell, within=existing | mask):
                merged_parts[i].extend(part)
                merged_masks[i] = existing | mask
                merged_labels[i].extend(label)
                break
        else:
            merged_parts.append(list(part))
            merged_masks.append(mask)
            merged_labels.append(list(label))

    logger.info(f"Compacted {decomposition.part_count} parts to {len(merged_parts)}")
    return Decomposition(
        parts=tuple(tuple(p) for p in merged_parts),
        labels=tuple(tuple(label) for label in merged_labels),
        bound=decomposition.bound,
        kernel_size=decomposition.kernel_size,
        trace_count=decomposition.trace_count,
        compacted_from=decomposition.part_count,
    )

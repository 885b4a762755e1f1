"""(k,u)-intersecting decisions, violation witnesses and decomposition checks"""

import logging
from typing import Optional

from checks.graph import DisjointnessGraph, bits_of
from decomposer.bound import theorem_bound
from decomposer.models import Decomposition, VerificationReport
from family.models import (
    BoundParams, DomainError, SetFamily, StructureError, Witness
)

logger = logging.getLogger(__name__)


def _check_u(family: SetFamily, u: int) -> None:
    if not 1 <= u <= family.s:
        raise DomainError(f"u must satisfy 1 <= u <= s={family.s}, got {u}")


def _check_k(k: int) -> None:
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")


def disjointness_graph(family: SetFamily, u: int) -> DisjointnessGraph:
    """Edge between members i != j iff they share fewer than u elements"""
    _check_u(family, u)
    return DisjointnessGraph.from_bitsets(family.bitsets, u)


def is_intersecting(family: SetFamily, k: int, u: int) -> bool:
    """True iff no k distinct members are pairwise at intersection < u.

    Decided exactly as "the disjointness graph has no k-clique".
    """
    _check_k(k)
    _check_u(family, u)
    if len(family) < k:
        return True
    graph = disjointness_graph(family, u)
    return not graph.has_clique(k)


def find_witness(family: SetFamily, k: int, u: int) -> Optional[Witness]:
    """Lexicographically least k-clique of the disjointness graph, if any"""
    _check_k(k)
    _check_u(family, u)
    if len(family) < k:
        return None
    clique = disjointness_graph(family, u).least_clique(k)
    return Witness(clique) if clique is not None else None


def verify_decomposition(
    family: SetFamily,
    decomposition: Decomposition,
    ell: int,
    u: int,
    *,
    k: Optional[int] = None,
) -> VerificationReport:
    """Check cover, partition, per-part (ell,u) property and part count.

    The part count is compared with ``theorem_bound`` when ``k`` is given and
    with the trivial one-member-per-part bound otherwise.

    Raises:
        StructureError: a part references a member index outside the family
    """
    _check_k(ell)
    _check_u(family, u)
    size = len(family)
    seen = 0
    disjoint = True
    for i, part in enumerate(decomposition.parts):
        for index in part:
            if not 0 <= index < size:
                raise StructureError(f"part {i} references member {index}, family has {size}")
        mask = bits_of(part)
        if seen & mask:
            disjoint = False
        seen |= mask

    full = (1 << size) - 1
    missing = tuple(i for i in range(size) if not seen >> i & 1)

    graph = disjointness_graph(family, u)
    failing_part = None
    witness = None
    for i, part in enumerate(decomposition.parts):
        clique = graph.least_clique(ell, within=bits_of(part))
        if clique is not None:
            failing_part, witness = i, clique
            break

    bound = theorem_bound(BoundParams(s=family.s, k=k, u=u, ell=ell)) if k is not None else max(1, size)
    report = VerificationReport(
        covers=seen == full,
        disjoint=disjoint,
        parts_ok=failing_part is None,
        within_bound=decomposition.part_count <= bound,
        bound=bound,
        part_count=decomposition.part_count,
        failing_part=failing_part,
        witness=witness,
        missing=missing,
    )
    if not report.verified:
        logger.info(f"Decomposition failed verification: {report.to_dict()}")
    return report

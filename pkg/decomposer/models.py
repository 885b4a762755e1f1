"""Data models for the constructive decomposition"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

from family.models import MemberSet, StructureError


@dataclass(frozen=True)
class Kernel:
    """Greedy maximal scattered subfamily: members pairwise below u"""
    indices: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.indices)

    def to_dict(self) -> Dict[str, Any]:
        return {"indices": list(self.indices), "m": self.m}


@dataclass(frozen=True)
class TraceCover:
    """Traces X (u-subsets of kernel members) and each member's chosen trace.

    ``assignment[i]`` is the index into ``traces`` of member i's trace.
    """
    traces: Tuple[MemberSet, ...]
    assignment: Tuple[int, ...]

    def trace_of(self, member_index: int) -> MemberSet:
        return self.traces[self.assignment[member_index]]

    def trace_parts(self) -> List[Tuple[MemberSet, Tuple[int, ...]]]:
        """Nonempty F_X parts in canonical trace order"""
        buckets: List[List[int]] = [[] for _ in self.traces]
        for member_index, trace_index in enumerate(self.assignment):
            buckets[trace_index].append(member_index)
        return [
            (trace, tuple(bucket))
            for trace, bucket in zip(self.traces, buckets)
            if bucket
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "traces": [list(t.elements) for t in self.traces],
            "assignment": list(self.assignment),
        }


@dataclass(frozen=True)
class Decomposition:
    """Ordered partition of member indices into labeled parts.

    ``labels[i]`` lists the traces merged into part i (empty when the part
    did not come from the trace pipeline, e.g. oracle partitions).
    """
    parts: Tuple[Tuple[int, ...], ...]
    labels: Tuple[Tuple[MemberSet, ...], ...] = ()
    bound: Optional[int] = None
    kernel_size: Optional[int] = None
    trace_count: Optional[int] = None
    compacted_from: Optional[int] = None

    def __post_init__(self):
        normalized = tuple(tuple(sorted(part)) for part in self.parts)
        for i, part in enumerate(normalized):
            if not part:
                raise StructureError(f"part {i} is empty")
            if len(set(part)) != len(part):
                raise StructureError(f"part {i} repeats a member index")
        object.__setattr__(self, "parts", normalized)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(() for _ in normalized))
        elif len(self.labels) != len(normalized):
            raise StructureError("labels must align with parts")

    @classmethod
    def from_parts(cls, parts: Sequence[Sequence[int]], **metadata: Any) -> "Decomposition":
        return cls(parts=tuple(tuple(p) for p in parts), **metadata)

    @property
    def part_count(self) -> int:
        return len(self.parts)

    def with_metadata(self, **metadata: Any) -> "Decomposition":
        return replace(self, **metadata)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "parts": [list(p) for p in self.parts],
            "labels": [[list(t.elements) for t in label] for label in self.labels],
            "bound": self.bound,
            "kernel_size": self.kernel_size,
            "trace_count": self.trace_count,
            "compacted_from": self.compacted_from,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a decomposition against its family"""
    covers: bool
    disjoint: bool
    parts_ok: bool
    within_bound: bool
    bound: int
    part_count: int
    failing_part: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None
    missing: Tuple[int, ...] = field(default=())

    @property
    def verified(self) -> bool:
        return self.covers and self.disjoint and self.parts_ok and self.within_bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "covers": self.covers,
            "disjoint": self.disjoint,
            "parts_ok": self.parts_ok,
            "within_bound": self.within_bound,
            "bound": self.bound,
            "part_count": self.part_count,
            "failing_part": self.failing_part,
            "witness": list(self.witness) if self.witness is not None else None,
            "missing": list(self.missing),
        }

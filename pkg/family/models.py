"""Data models for uniform set families"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple


@dataclass(frozen=True)
class MemberSet:
    """One member of a family: a strictly increasing tuple of ground-set labels.

    Labels may be arbitrarily large; bitsets are built per family over the
    labels it actually uses (see ``SetFamily.bitsets``).
    """
    elements: Tuple[int, ...]

    def __post_init__(self):
        previous = -1
        for element in self.elements:
            if element < 0:
                raise DomainError(f"Negative element {element} in {self.elements}")
            if element <= previous:
                raise DomainError(f"Elements must be strictly increasing: {self.elements}")
            previous = element

    @classmethod
    def of(cls, elements: Iterable[int]) -> "MemberSet":
        """Build a member from any iterable of distinct labels"""
        items = list(elements)
        ordered = tuple(sorted(items))
        if len(set(ordered)) != len(items):
            raise DomainError(f"Duplicate element in member {items}")
        return cls(ordered)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def max_element(self) -> int:
        return self.elements[-1] if self.elements else -1

    def mask(self, index: Mapping[int, int]) -> int:
        """Bitset of this member under a label -> bit position map"""
        return sum(1 << index[e] for e in self.elements)

    def issubset(self, other: "MemberSet") -> bool:
        return set(self.elements).issubset(other.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __lt__(self, other: "MemberSet") -> bool:
        return self.elements < other.elements

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


@dataclass(frozen=True)
class SetFamily:
    """An s-uniform family over the ground set [0, n), canonically ordered.

    Use ``SetFamily.build`` to construct from arbitrary member collections;
    the raw constructor expects already canonical input and only validates it.
    """
    s: int
    n: int
    members: Tuple[MemberSet, ...] = ()

    def __post_init__(self):
        if self.s < 1:
            raise DomainError(f"Uniformity must be positive, got s={self.s}")
        if self.n < 1:
            raise DomainError(f"Ground-set size must be positive, got n={self.n}")
        previous: Optional[MemberSet] = None
        for member in self.members:
            if member.size != self.s:
                raise DomainError(f"Member {member} has size {member.size}, expected s={self.s}")
            if member.max_element >= self.n:
                raise DomainError(f"Member {member} leaves the ground set [0, {self.n})")
            if previous is not None and not previous < member:
                raise DomainError("Members must be distinct and in canonical order")
            previous = member

    @classmethod
    def build(
        cls,
        members: Iterable[Iterable[int]],
        s: Optional[int] = None,
        n: Optional[int] = None,
    ) -> "SetFamily":
        """Canonicalize: convert, deduplicate and sort members; infer s and n"""
        converted = {m if isinstance(m, MemberSet) else MemberSet.of(m) for m in members}
        ordered = tuple(sorted(converted, key=lambda m: m.elements))
        if s is None:
            if not ordered:
                raise DomainError("Cannot infer uniformity of an empty family")
            s = ordered[0].size
        if n is None:
            n = max((m.max_element for m in ordered), default=s - 1) + 1
            n = max(n, 1)
        return cls(s=s, n=n, members=ordered)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[MemberSet]:
        return iter(self.members)

    def __getitem__(self, index: int) -> MemberSet:
        return self.members[index]

    @cached_property
    def label_index(self) -> Dict[int, int]:
        """Dense bit position of every label used by some member"""
        labels = sorted({e for m in self.members for e in m.elements})
        return {label: position for position, label in enumerate(labels)}

    @cached_property
    def bitsets(self) -> List[int]:
        """Member bitsets over the dense relabeling; intersection sizes are unchanged"""
        return [m.mask(self.label_index) for m in self.members]

    def subfamily(self, indices: Iterable[int]) -> "SetFamily":
        """Members at the given indices, keeping s and n"""
        chosen = sorted(set(indices))
        return SetFamily(s=self.s, n=self.n, members=tuple(self.members[i] for i in chosen))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "n": self.n,
            "members": [list(m.elements) for m in self.members],
        }


@dataclass(frozen=True)
class BoundParams:
    """Parameters (s, k, u, ell) of the decomposition bound"""
    s: int
    k: int
    u: int
    ell: int

    def __post_init__(self):
        if self.s < 1:
            raise DomainError(f"s must be >= 1, got {self.s}")
        if self.k < 2:
            raise DomainError(f"k must be >= 2, got {self.k}")
        if not 1 <= self.u <= self.s:
            raise DomainError(f"u must satisfy 1 <= u <= s={self.s}, got {self.u}")
        if not 2 <= self.ell < self.k:
            raise DomainError(f"ell must satisfy 2 <= ell < k={self.k}, got {self.ell}")

    def to_dict(self) -> Dict[str, int]:
        return {"s": self.s, "k": self.k, "u": self.u, "ell": self.ell}


@dataclass(frozen=True)
class Witness:
    """k member indices that are pairwise at intersection below u"""
    indices: Tuple[int, ...]

    def __str__(self) -> str:
        return " ".join(str(i) for i in self.indices)

    def to_dict(self) -> Dict[str, Any]:
        return {"indices": list(self.indices)}


class KufamError(Exception):
    """Base exception for the toolkit"""
    pass


class ParseError(KufamError):
    """Malformed family file"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FormatError(ParseError):
    """Family file lacks information needed to build a family"""
    pass


class UniformityError(ParseError):
    """Member line whose length differs from the family's uniformity"""
    pass


class DomainError(KufamError):
    """Parameter outside its admissible range"""
    pass


class StructureError(KufamError):
    """Decomposition that does not fit its family"""
    pass


class KernelCoverageError(KufamError):
    """Member contained in no trace of the kernel"""
    pass


class NotIntersectingError(KufamError):
    """Family fails the (k,u)-intersecting precondition"""

    def __init__(self, witness: Witness, k: int, u: int):
        self.witness = witness
        self.k = k
        self.u = u
        super().__init__(f"Family is not ({k},{u})-intersecting; witness {witness}")


class CapacityError(KufamError):
    """Instance larger than the configured exact-search cap"""
    pass


class InvariantViolation(KufamError):
    """A proven guarantee failed to hold; indicates a bug"""
    pass

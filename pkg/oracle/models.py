"""Data models for the exact oracle and the extremal search"""

from dataclasses import dataclass
from typing import Any, Dict

from decomposer.models import Decomposition
from family.codec import serialize_family
from family.models import SetFamily


@dataclass(frozen=True)
class OracleResult:
    """Exact minimum number of (ell,u)-intersecting parts, with one optimal partition"""
    minimum: int
    optimal_parts: Decomposition
    explored: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "minimum": self.minimum,
            "optimal_parts": [list(p) for p in self.optimal_parts.parts],
            "explored": self.explored,
        }


@dataclass(frozen=True)
class SearchReport:
    """Best lower-bound witness found by the extremal search"""
    best_value: int
    witness_family: SetFamily
    families_examined: int
    budget_exhausted: bool
    seed: int
    mode: str
    nodes: int
    bound: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "best_value": self.best_value,
            "witness_family": serialize_family(self.witness_family),
            "families_examined": self.families_examined,
            "budget_exhausted": self.budget_exhausted,
            "seed": self.seed,
            "mode": self.mode,
            "nodes": self.nodes,
            "bound": self.bound,
        }

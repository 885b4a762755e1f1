"""Experiment rows and the versioned CSV format"""

import csv
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, TextIO

CSV_VERSION_LINE = "# kufam-csv v1"
CSV_COLUMNS = (
    "s", "k", "u", "ell", "n", "family_size", "kernel_size",
    "constructive_parts", "oracle_parts", "bound", "verified", "seed", "wall_ms",
)


@dataclass(frozen=True)
class ExperimentRecord:
    """One generated family run through decompose, verify and (optionally) the oracle"""
    s: int
    k: int
    u: int
    ell: int
    n: int
    family_size: int
    kernel_size: int
    constructive_parts: int
    oracle_parts: Optional[int]
    bound: int
    verified: bool
    seed: int
    wall_ms: Optional[int] = None

    def sandwich_holds(self) -> bool:
        """oracle_parts <= constructive_parts <= bound"""
        if self.constructive_parts > self.bound:
            return False
        return self.oracle_parts is None or self.oracle_parts <= self.constructive_parts

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "k": self.k,
            "u": self.u,
            "ell": self.ell,
            "n": self.n,
            "family_size": self.family_size,
            "kernel_size": self.kernel_size,
            "constructive_parts": self.constructive_parts,
            "oracle_parts": "" if self.oracle_parts is None else self.oracle_parts,
            "bound": self.bound,
            "verified": "true" if self.verified else "false",
            "seed": self.seed,
            "wall_ms": "" if self.wall_ms is None else self.wall_ms,
        }


def write_csv(records: Iterable[ExperimentRecord], stream: TextIO) -> int:
    """Write the version line, header and rows; returns the row count"""
    stream.write(CSV_VERSION_LINE + "\n")
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    rows = 0
    for record in records:
        writer.writerow(record.to_dict())
        rows += 1
    return rows

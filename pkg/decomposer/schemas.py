"""Pydantic schemas for the machine-readable decomposition document"""

from pydantic import BaseModel, Field
from typing import List, Optional


class PartSchema(BaseModel):
    """One part: member indices and the traces merged into it"""
    index: int
    members: List[int]
    traces: List[List[int]] = Field(default_factory=list)
    sets: Optional[List[List[int]]] = None


class VerificationSchema(BaseModel):
    """Verification flags of a decomposition"""
    covers: bool
    disjoint: bool
    parts_ok: bool
    within_bound: bool
    failing_part: Optional[int] = None
    witness: Optional[List[int]] = None


class DecompositionDocument(BaseModel):
    """Decomposition document mirroring the text format"""
    parts: int
    bound: int
    verified: bool
    s: int
    k: int
    u: int
    ell: int
    family_size: int
    kernel_size: Optional[int] = None
    trace_count: Optional[int] = None
    compacted_from: Optional[int] = None
    verification: Optional[VerificationSchema] = None
    part_list: List[PartSchema] = Field(default_factory=list)

    class Config:
        json_schema_extra = {
            "example": {
                "parts": 2,
                "bound": 4,
                "verified": True,
                "s": 2, "k": 3, "u": 1, "ell": 2,
                "family_size": 4,
                "kernel_size": 2,
                "trace_count": 4,
                "part_list": [
                    {"index": 0, "members": [0, 1], "traces": [[1]]},
                    {"index": 1, "members": [2, 3], "traces": [[4]]},
                ],
            }
        }

"""Pydantic schema for generator specifications"""

from pydantic import BaseModel, Field, model_validator
from typing import Literal, Optional

GeneratorKind = Literal["random", "star", "scattered_stars", "sunflower", "complete"]

# Fields each kind needs beyond `kind` and `seed`
REQUIRED_FIELDS = {
    "random": ("n", "s", "count"),
    "star": ("n", "s", "u", "count"),
    "scattered_stars": ("n", "s", "u", "k", "per_star"),
    "sunflower": ("core_size", "petal_size", "petals"),
    "complete": ("n", "s"),
}


class GenSpec(BaseModel):
    """Generator request, expressible entirely through CLI flags"""
    kind: GeneratorKind
    n: Optional[int] = Field(default=None, ge=1)
    s: Optional[int] = Field(default=None, ge=1)
    count: Optional[int] = Field(default=None, ge=0)
    u: Optional[int] = Field(default=None, ge=1)
    k: Optional[int] = Field(default=None, ge=2)
    per_star: Optional[int] = Field(default=None, ge=0)
    core_size: Optional[int] = Field(default=None, ge=0)
    petal_size: Optional[int] = Field(default=None, ge=0)
    petals: Optional[int] = Field(default=None, ge=1)
    seed: int = Field(default=0, ge=0, le=2**64 - 1)

    @model_validator(mode="after")
    def check_kind_fields(self) -> "GenSpec":
        missing = [name for name in REQUIRED_FIELDS[self.kind] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"kind '{self.kind}' requires: {', '.join(missing)}")
        if self.u is not None and self.s is not None and self.u > self.s:
            raise ValueError(f"u={self.u} exceeds s={self.s}")
        if self.kind == "sunflower" and self.core_size + self.petal_size < 1:
            raise ValueError("sunflower members need core_size + petal_size >= 1")
        return self

    class Config:
        json_schema_extra = {
            "example": {"kind": "star", "n": 4, "s": 2, "u": 1, "count": 3, "seed": 0}
        }

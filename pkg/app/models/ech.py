from enum import Enum
from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator, model_serializer, model_validator

from app.models.curve import OrbitEnd
from app.models.numbers import HalfInt


class Partition(BaseModel):
    """Multiset of positive integers, kept in descending order."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[PositiveInt, ...]

    @model_validator(mode="before")
    @classmethod
    def from_parts(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            return {"parts": data}
        return data

    @field_validator("parts")
    @classmethod
    def sort_descending(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        if not parts:
            raise ValueError("a partition needs at least one part")
        return tuple(sorted(parts, reverse=True))

    @model_serializer
    def serialize(self) -> List[int]:
        return list(self.parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls.model_validate(list(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


class EndSign(str, Enum):
    POS = "pos"
    NEG = "neg"


class RealGenerator(BaseModel):
    """Finite set of (brake orbit, total multiplicity) pairs with distinct orbits."""

    model_config = ConfigDict(frozen=True)

    entries: List[OrbitEnd] = Field(default_factory=list)

    @field_validator("entries")
    @classmethod
    def distinct_orbits(cls, entries: List[OrbitEnd]) -> List[OrbitEnd]:
        orbits = [entry.orbit for entry in entries]
        if len(set(orbits)) != len(orbits):
            raise ValueError("a generator lists each orbit at most once")
        return entries


class RelativeClassData(BaseModel):
    model_config = ConfigDict(frozen=True)

    c1: int = Field(0, description="Relative first Chern number")
    Q: int = Field(0, description="Relative self-intersection number")


class RechAuditRow(BaseModel):
    partition: Partition
    left: HalfInt
    equality: bool


class RechReport(BaseModel):
    """Audit of the partition inequality over every partition of n."""

    n: int
    min: HalfInt
    right: HalfInt
    equality_partitions: List[Partition]
    expected: Partition
    strict_elsewhere: bool = Field(..., description="Left side exceeds the right side off the equality set")
    checked: int
    counterexamples: List[str] = Field(default_factory=list)
    audit: Optional[List[RechAuditRow]] = None


class WritheBound(BaseModel):
    bound: int
    equality_possible: bool

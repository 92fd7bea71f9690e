from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, PositiveInt

from app.models.orbit import OrbitSpec


class OrbitEnd(BaseModel):
    """A puncture (or a puncture pair) asymptotic to an iterate of an orbit."""

    model_config = ConfigDict(frozen=True)

    orbit: OrbitSpec
    mult: PositiveInt = Field(..., description="Covering multiplicity of the end")


class CurveConfig(BaseModel):
    """Combinatorial shadow of a Real pseudoholomorphic curve.

    Each ``pair_*`` entry stands for a pair of nonsymmetric punctures
    exchanged by the involution.
    """

    model_config = ConfigDict(frozen=True)

    genus: int = Field(0, ge=0, description="Genus of the domain")
    c1: int = Field(0, description="Relative first Chern number in the chosen trivialization")
    sym_pos: List[OrbitEnd] = Field(default_factory=list, description="Positive symmetric punctures")
    sym_neg: List[OrbitEnd] = Field(default_factory=list, description="Negative symmetric punctures")
    pair_pos: List[OrbitEnd] = Field(default_factory=list, description="Positive nonsymmetric puncture pairs")
    pair_neg: List[OrbitEnd] = Field(default_factory=list, description="Negative nonsymmetric puncture pairs")

    @property
    def positive_ends(self) -> List[OrbitEnd]:
        return self.sym_pos + self.pair_pos

    @property
    def negative_ends(self) -> List[OrbitEnd]:
        return self.sym_neg + self.pair_neg

    def puncture_count(self) -> int:
        return len(self.sym_pos) + len(self.sym_neg) + 2 * (len(self.pair_pos) + len(self.pair_neg))

    def is_trivial_cylinder(self) -> bool:
        return (
            self.genus == 0
            and self.c1 == 0
            and not self.pair_pos
            and not self.pair_neg
            and len(self.sym_pos) == 1
            and self.sym_pos == self.sym_neg
        )


class TrivialCylinderCover(BaseModel):
    """Real branched cover of the trivial cylinder over ``base``."""

    model_config = ConfigDict(frozen=True)

    base: OrbitSpec
    genus: int = Field(0, ge=0)
    a: List[PositiveInt] = Field(..., min_length=1, description="Positive symmetric multiplicities")
    b: List[PositiveInt] = Field(..., min_length=1, description="Negative symmetric multiplicities")
    c: List[PositiveInt] = Field(default_factory=list, description="Positive pair multiplicities")
    d: List[PositiveInt] = Field(default_factory=list, description="Negative pair multiplicities")

    @property
    def total_multiplicity(self) -> int:
        return sum(self.a) + 2 * sum(self.c)


class DoubledCurve(BaseModel):
    """Non-Real data of a curve without symmetric punctures, each pair counted twice."""

    genus: int
    c1: int
    pos: List[OrbitEnd]
    neg: List[OrbitEnd]


class IndexReport(BaseModel):
    ind_real: int
    euler_characteristic: int
    ind_doubled: Optional[int] = Field(None, description="Index of the doubled curve, when no puncture is symmetric")
    closed_form: Optional[int] = Field(None, description="Closed-form index of a trivial-cylinder cover")
    minimum_configuration: Optional[bool] = None


class ThetaIndex(BaseModel):
    value: int
    equality: bool = Field(..., description="Both the ceiling and the floor sums are tight")

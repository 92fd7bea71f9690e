from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt

from app.models.curve import CurveConfig
from app.models.numbers import HalfInt


class EndCover(BaseModel):
    """Ends of the covering curve lying over one end of the underlying curve."""

    model_config = ConfigDict(frozen=True)

    sym: List[PositiveInt] = Field(default_factory=list, description="Symmetric covering ends, by covering degree")
    pairs: List[PositiveInt] = Field(default_factory=list, description="Covering end pairs, by covering degree")

    @property
    def weight(self) -> int:
        return sum(self.sym) + 2 * sum(self.pairs)


class EndCovers(BaseModel):
    """One EndCover per end of the underlying curve, listed like its CurveConfig."""

    model_config = ConfigDict(frozen=True)

    sym_pos: List[EndCover] = Field(default_factory=list)
    sym_neg: List[EndCover] = Field(default_factory=list)
    pair_pos: List[EndCover] = Field(default_factory=list)
    pair_neg: List[EndCover] = Field(default_factory=list)


class CoverAssignment(BaseModel):
    """A Real multiple cover u of a somewhere injective curve described end by end."""

    model_config = ConfigDict(
        frozen=True,
        validate_by_name=True,
        validate_by_alias=True,
        serialize_by_alias=True,
    )

    base: CurveConfig = Field(..., description="The underlying somewhere injective curve")
    degree: PositiveInt = Field(..., alias="D", description="Covering degree")
    branch: NonNegativeInt = Field(..., alias="B", description="Total branch number")
    genus: NonNegativeInt = Field(0, description="Genus of the covering curve")
    covers: EndCovers


class Building(BaseModel):
    """Levels from top to bottom; the negative ends of a level are the positive ends of the next."""

    model_config = ConfigDict(frozen=True)

    levels: List[List[CurveConfig]] = Field(..., min_length=1)


class LemmaName(str, Enum):
    LEM1 = "lem1"
    LEM2 = "lem2"
    LEM3 = "lem3"


class Mu1Bounds(BaseModel):
    k: int
    lower: HalfInt
    upper: HalfInt
    value: HalfInt
    inside: bool
    saturates: Optional[str] = Field(None, description="'lower' or 'upper' when the value sits on a bound (k > 1)")


class MuCzRelation(BaseModel):
    k: int
    residual: int = Field(..., description="mu_CZ(beta^k) - 2 k mu1(beta)")
    expected_min: int
    expected_max: int
    holds: bool


class ExceptionalCounts(BaseModel):
    count1: int
    count2: int


class CoverBoundReport(BaseModel):
    degree: int
    branch: int
    ind_base: int
    ind_cover: int
    count1: int
    count2: int
    bound: int
    holds: bool
    equality: bool


class PlaneBuildingReport(BaseModel):
    index: int
    levels: int
    holds: bool = Field(..., description="Index is at least 1")
    equality: bool
    single_plane: bool
    counterexamples: List[str] = Field(default_factory=list)


class BadBreakingTrace(BaseModel):
    """The inequality chain that rules out the breaking, with exact values."""

    d: int
    mu1: HalfInt
    mu1_top: Optional[HalfInt] = Field(None, description="mu1 of the (d+1)-st iterate when it is nondegenerate")
    required_lower: HalfInt = Field(..., description="d (2 mu1 + 1) + 3/2, forced by the adjunction formula")
    allowed_upper: HalfInt = Field(..., description="(d + 1) mu1 + d/2, from the iteration bound")
    lhs: HalfInt = Field(..., description="-d/2 - 3/2")
    rhs: HalfInt = Field(..., description="(d - 1) mu1")
    top_within_upper: Optional[bool] = Field(None, description="mu1_top <= allowed_upper; None when the iterate is degenerate")
    contradiction: bool


class LemmaBounds(BaseModel):
    lemma: LemmaName
    ind_cover: int
    ind_base: int
    count2: int
    bound: int
    holds: bool
    hypotheses: List[str]

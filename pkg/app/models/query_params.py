from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.core.config import settings
from app.models.numbers import Rational
from app.models.orbit import OrbitClass


class ResponseFormat(str, Enum):
    """Enum for report format options."""

    JSON = "json"
    TABLE = "table"


class Suite(str, Enum):
    ECH_LEMMA = "ech-lemma"
    PARTITION = "partition"
    MULTICOVER = "multicover"
    BUILDINGS = "buildings"
    BAD_BREAKING = "bad-breaking"
    ITERATE_BOUNDS = "iterate-bounds"
    ITERATION = "iteration"
    CLASSIFICATION = "classification"


class EnumBounds(BaseModel):
    """Bounds of the exhaustive enumerations behind the verification suites."""

    max_total_multiplicity: int = Field(
        settings.VERIFY_MAX_MULTIPLICITY, ge=1, description="Largest total multiplicity of a trivial-cylinder cover"
    )
    max_genus: int = Field(settings.VERIFY_MAX_GENUS, ge=0, description="Largest genus of an enumerated cover")
    max_parts: int = Field(settings.VERIFY_MAX_PARTS, ge=1, description="Largest number of ends on one side of a cover")
    theta_denominator_bound: int = Field(
        settings.VERIFY_THETA_DENOMINATOR, ge=1, description="Largest denominator of an elliptic rotation number"
    )
    cover_theta_denominator: int = Field(
        settings.VERIFY_COVER_THETA_DENOMINATOR,
        ge=1,
        description="Largest denominator of an elliptic rotation number in cover and breaking suites",
    )
    max_degree: int = Field(settings.VERIFY_MAX_DEGREE, ge=1, description="Largest covering degree D")
    max_n: int = Field(settings.VERIFY_MAX_N, ge=1, description="Largest total multiplicity in the partition suite")
    max_d: int = Field(settings.VERIFY_MAX_D, ge=1, description="Largest d in the bad-breaking suite")
    max_k: int = Field(settings.VERIFY_MAX_K, ge=1, description="Largest iterate in the iteration suites")
    samples: int = Field(settings.VERIFY_SAMPLES, ge=1, description="Number of sampled half-period matrices")
    seed: int = Field(settings.VERIFY_SEED, description="Seed of the matrix sampler")
    max_levels: int = Field(settings.VERIFY_MAX_LEVELS, ge=1, description="Largest number of building levels")
    max_punctures: int = Field(settings.VERIFY_MAX_PUNCTURES, ge=1, description="Largest puncture count of a building")

    @classmethod
    def from_flags(cls, **flags: Optional[int]) -> "EnumBounds":
        """Bounds from the short command-line names; unset flags keep the defaults."""
        return cls(**{BOUND_FLAGS.get(name, name): value for name, value in flags.items() if value is not None})


BOUND_FLAGS = {
    "max_mult": "max_total_multiplicity",
    "theta_den": "theta_denominator_bound",
    "cover_theta_den": "cover_theta_denominator",
}


class OrbitQueryParams(BaseModel):
    """Query parameters naming an orbit."""

    model_config = ConfigDict(validate_by_name=True, validate_by_alias=True)

    orbit_class: OrbitClass = Field(..., alias="class", description="Orbit class: elliptic, neg-hyp-1, neg-hyp-2, pos-hyp-1 or pos-hyp-2")
    theta: Optional[Rational] = Field(None, description="Rotation number of an elliptic orbit, e.g. '5/17'")
    mu1: Optional[Rational] = Field(None, description="mu1 of a hyperbolic orbit, e.g. '1/2'")


class ClassifyRequest(BaseModel):
    """Body of a classification request."""

    matrix: List[Rational] = Field(..., min_length=4, max_length=4, description="Four entries, row-major")
    half: bool = Field(False, description="Treat the matrix as the half-period matrix")

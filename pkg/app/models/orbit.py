import math
from enum import Enum
from fractions import Fraction
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_serializer, model_validator

from app.core.errors import DegenerateOrbit, NotSymplectic, ParityError
from app.models.numbers import HALF, HalfInt, Rational, format_rational, parse_rational


class OrbitClass(str, Enum):
    """The five classes of a nondegenerate brake orbit."""

    ELLIPTIC = "elliptic"
    NEG_HYP_ONE = "neg-hyp-1"
    NEG_HYP_TWO = "neg-hyp-2"
    POS_HYP_ONE = "pos-hyp-1"
    POS_HYP_TWO = "pos-hyp-2"

    @property
    def is_elliptic(self) -> bool:
        return self is OrbitClass.ELLIPTIC

    @property
    def is_hyperbolic(self) -> bool:
        return self is not OrbitClass.ELLIPTIC

    @property
    def is_positive(self) -> bool:
        return self in (OrbitClass.POS_HYP_ONE, OrbitClass.POS_HYP_TWO)

    @property
    def is_negative(self) -> bool:
        return self in (OrbitClass.NEG_HYP_ONE, OrbitClass.NEG_HYP_TWO)

    @property
    def is_type_one(self) -> bool:
        return self in (OrbitClass.NEG_HYP_ONE, OrbitClass.POS_HYP_ONE)

    def swapped(self) -> "OrbitClass":
        """Exchange type one and type two, keeping the sign character."""
        return _SWAPPED[self]


_SWAPPED = {
    OrbitClass.ELLIPTIC: OrbitClass.ELLIPTIC,
    OrbitClass.NEG_HYP_ONE: OrbitClass.NEG_HYP_TWO,
    OrbitClass.NEG_HYP_TWO: OrbitClass.NEG_HYP_ONE,
    OrbitClass.POS_HYP_ONE: OrbitClass.POS_HYP_TWO,
    OrbitClass.POS_HYP_TWO: OrbitClass.POS_HYP_ONE,
}


class OrbitSpec(BaseModel):
    """An abstract brake orbit: class tag plus the index seed in a fixed trivialization."""

    model_config = ConfigDict(
        frozen=True,
        validate_by_name=True,
        validate_by_alias=True,
        serialize_by_alias=True,
    )

    orbit_class: OrbitClass = Field(..., alias="class", description="Orbit class tag")
    theta: Optional[Rational] = Field(
        None,
        description="Rotation number per period in full turns (elliptic only), e.g. '5/17'",
    )
    mu1: Optional[HalfInt] = Field(
        None,
        description="Half-period index mu1 of the orbit, a strict half-integer (hyperbolic only), e.g. '3/2'",
    )

    @model_validator(mode="after")
    def check_seed(self) -> "OrbitSpec":
        if self.orbit_class.is_elliptic:
            if self.theta is None:
                raise ValueError("elliptic orbit requires theta")
            if self.mu1 is not None:
                raise ValueError("elliptic mu1 is derived from theta and cannot be given")
            if self.theta.denominator == 1:
                raise DegenerateOrbit(f"elliptic rotation number {self.theta} is an integer")
        else:
            if self.mu1 is None:
                raise ValueError(f"{self.orbit_class.value} orbit requires mu1")
            if self.theta is not None:
                raise ValueError("theta only applies to elliptic orbits")
            if self.mu1.is_integer():
                raise ParityError(f"hyperbolic mu1 must be a strict half-integer, got {self.mu1}")
        return self

    @property
    def mu1_base(self) -> HalfInt:
        if self.theta is not None:
            return HalfInt.integer(math.floor(self.theta)) + HALF
        return self.mu1

    def label(self) -> str:
        if self.theta is not None:
            return f"{self.orbit_class.value}(theta={self.theta})"
        return f"{self.orbit_class.value}(mu1={self.mu1})"


class Sp2Matrix(BaseModel):
    """Exact 2x2 symplectic matrix (a b; c d), serialized as four row-major strings."""

    model_config = ConfigDict(frozen=True)

    a: Rational
    b: Rational
    c: Rational
    d: Rational

    @model_validator(mode="before")
    @classmethod
    def from_entries(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            if len(data) != 4:
                raise ValueError(f"a 2x2 matrix needs 4 entries, got {len(data)}")
            return dict(zip("abcd", data))
        return data

    @model_validator(mode="after")
    def check_determinant(self) -> "Sp2Matrix":
        det = self.a * self.d - self.b * self.c
        if det != 1:
            raise NotSymplectic(f"determinant is {det}, expected 1")
        return self

    @model_serializer
    def serialize(self) -> List[str]:
        return [format_rational(x) for x in self.entries()]

    @classmethod
    def of(cls, *entries: Any) -> "Sp2Matrix":
        return cls.model_validate(list(entries))

    @classmethod
    def identity(cls) -> "Sp2Matrix":
        return cls.of(1, 0, 0, 1)

    @classmethod
    def rotation(cls, cos: Any, sin: Any) -> "Sp2Matrix":
        """The rotation (cos -sin; sin cos) through a rational point of the unit circle."""
        cos, sin = parse_rational(cos), parse_rational(sin)
        if cos * cos + sin * sin != 1:
            raise NotSymplectic(f"({cos}, {sin}) is not on the unit circle")
        return cls.of(cos, -sin, sin, cos)

    def entries(self) -> List[Fraction]:
        return [self.a, self.b, self.c, self.d]

    def trace(self) -> Fraction:
        return self.a + self.d

    def inverse(self) -> "Sp2Matrix":
        return Sp2Matrix.of(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> "Sp2Matrix":
        return Sp2Matrix.of(-self.a, -self.b, -self.c, -self.d)

    def __matmul__(self, other: "Sp2Matrix") -> "Sp2Matrix":
        return Sp2Matrix.of(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def conjugate_diagonal(self, eps: Any) -> "Sp2Matrix":
        """diag(eps, 1/eps) M diag(eps, 1/eps)^-1."""
        eps = parse_rational(eps)
        if eps == 0:
            raise ValueError("conjugating factor must be nonzero")
        return Sp2Matrix.of(self.a, self.b * eps * eps, self.c / (eps * eps), self.d)


class HalfPeriodIndices(BaseModel):
    """Maslov-type indices of the half-period path against L0 and L1."""

    model_config = ConfigDict(frozen=True)

    iL0: int = Field(..., description="Index against L0; mu1 = 1/2 + iL0")
    iL1: int = Field(..., description="Index against L1; mu2 = 1/2 + iL1")
    iL0_sqrt: int = Field(..., description="Index at omega = sqrt(-1) against L0")
    iL1_sqrt: int = Field(..., description="Index at omega = sqrt(-1) against L1")

    @model_validator(mode="after")
    def check_brackets(self) -> "HalfPeriodIndices":
        if not (self.iL0 <= self.iL0_sqrt <= self.iL0 + 1):
            raise ValueError("iL0 <= iL0_sqrt <= iL0 + 1 violated")
        if not (self.iL1 <= self.iL1_sqrt <= self.iL1 + 1):
            raise ValueError("iL1 <= iL1_sqrt <= iL1 + 1 violated")
        return self


class QuotientKind(str, Enum):
    CIRCLE = "circle"
    POS_SPIKE = "pos-spike"
    NEG_SPIKE = "neg-spike"


class QuotientPoint(BaseModel):
    """Point of the classification space: a circle with four spikes.

    Circle points carry cos(2 pi theta) and the sign of the sine, plus the
    angle mod 1 when it is rational. Spike points carry y exactly as y^2 and
    the sign of y.
    """

    model_config = ConfigDict(frozen=True)

    kind: QuotientKind
    angle: Optional[Rational] = Field(None, description="Rotation angle mod 1, when rational")
    cos: Optional[Rational] = None
    sin_sign: Optional[int] = None
    y_squared: Optional[Rational] = None
    y_sign: Optional[int] = None


class CanonicalForm(BaseModel):
    """Canonical representative (a, +-r; +-r', a) up to diagonal conjugation.

    The off-diagonal magnitude r = sqrt|a^2 - 1| is kept as its square.
    """

    model_config = ConfigDict(frozen=True)

    a: Rational
    b_sign: int
    c_sign: int
    off_diagonal_squared: Rational

    def matrix(self) -> Optional[Sp2Matrix]:
        root = rational_sqrt(self.off_diagonal_squared)
        if root is None:
            return None
        return Sp2Matrix.of(self.a, self.b_sign * root, self.c_sign * root, self.a)


class Classification(BaseModel):
    model_config = ConfigDict(serialize_by_alias=True)

    orbit_class: OrbitClass = Field(..., serialization_alias="class")
    canonical_form: CanonicalForm
    canonical_matrix: Optional[Sp2Matrix] = None
    quotient_point: QuotientPoint


class IterationRow(BaseModel):
    """One row of an iteration table; index fields are empty on a degenerate iterate."""

    k: int
    mu1: Optional[HalfInt] = None
    mu2: Optional[HalfInt] = None
    mu_cz: Optional[int] = None
    degenerate: bool = False


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)

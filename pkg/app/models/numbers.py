from dataclasses import dataclass
from fractions import Fraction
from typing import Annotated, Any, Union

from pydantic import GetCoreSchemaHandler, GetJsonSchemaHandler, PlainSerializer, PlainValidator, WithJsonSchema
from pydantic.json_schema import JsonSchemaValue
from pydantic_core import CoreSchema, core_schema

RationalLike = Union[int, str, Fraction]


def parse_rational(value: Any) -> Fraction:
    """Parse ``"5/17"``, ``"-3"``, ``"0.25"``, ints and Fractions exactly."""
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational number: {value!r}") from e
    raise ValueError(f"Not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "examples": ["5/17", "-3", "1/2"]}),
]


@dataclass(frozen=True, order=True)
class HalfInt:
    """Exact half-integer stored as twice its value.

    ``HalfInt(3)`` is 3/2, ``HalfInt(4)`` is 2.
    """

    twice: int

    @classmethod
    def of(cls, value: Union[RationalLike, "HalfInt"]) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        doubled = 2 * parse_rational(value)
        if doubled.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(doubled))

    @classmethod
    def integer(cls, value: int) -> "HalfInt":
        return cls(2 * value)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other: Union["HalfInt", int]) -> "HalfInt":
        if isinstance(other, HalfInt):
            return HalfInt(self.twice + other.twice)
        if isinstance(other, int):
            return HalfInt(self.twice + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Union["HalfInt", int]) -> "HalfInt":
        if isinstance(other, HalfInt):
            return HalfInt(self.twice - other.twice)
        if isinstance(other, int):
            return HalfInt(self.twice - 2 * other)
        return NotImplemented

    def __rsub__(self, other: int) -> "HalfInt":
        if isinstance(other, int):
            return HalfInt(2 * other - self.twice)
        return NotImplemented

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __mul__(self, other: int) -> "HalfInt":
        # only integer scaling keeps the value domain closed
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"

    @classmethod
    def __get_pydantic_core_schema__(cls, source_type: Any, handler: GetCoreSchemaHandler) -> CoreSchema:
        return core_schema.no_info_plain_validator_function(
            cls.of,
            serialization=core_schema.to_string_ser_schema(),
        )

    @classmethod
    def __get_pydantic_json_schema__(cls, schema: CoreSchema, handler: GetJsonSchemaHandler) -> JsonSchemaValue:
        return {"type": "string", "pattern": r"^-?\d+(/2)?$", "examples": ["3/2", "-1/2", "2"]}


HALF = HalfInt(1)


def half_sum(values) -> HalfInt:
    total = HalfInt(0)
    for value in values:
        total = total + value
    return total

class IndexCalculusError(Exception):
    """Base class for domain errors.

    Not a ``ValueError`` on purpose: raised inside a pydantic validator it
    propagates with its own type instead of becoming a ``ValidationError``.
    """


# Orbits and monodromy
class DegenerateOrbit(IndexCalculusError):
    """Orbit or monodromy has 1 (or, for the sign tables, -1) as an eigenvalue."""


class ParityError(IndexCalculusError):
    """A hyperbolic mu1 seed is an integer instead of a strict half-integer."""


class NotSymplectic(IndexCalculusError):
    """Matrix determinant differs from 1."""


class AsymmetricMatrix(IndexCalculusError):
    """Monodromy of a brake orbit must have equal diagonal entries."""


class DegenerateIterate(IndexCalculusError):
    """An elliptic iterate k has k*theta integral."""


class UnsupportedClass(IndexCalculusError):
    """Operation is not defined for this orbit class."""


class IntegralityError(IndexCalculusError):
    """An index that must be an integer came out as a strict half-integer."""


# Curves and covers
class BalanceViolation(IndexCalculusError):
    pass


class ParityViolation(IndexCalculusError):
    pass


class MultiplicityMismatch(IndexCalculusError):
    pass


class RiemannHurwitzViolation(IndexCalculusError):
    pass


class EndMismatch(IndexCalculusError):
    pass


class HypothesisViolation(IndexCalculusError):
    pass


class NotDynamicallyConvex(IndexCalculusError):
    pass


class MalformedBuilding(IndexCalculusError):
    pass


# Partitions
class NonUniqueMinimizer(IndexCalculusError):
    """Several partitions attain the minimum of the left side."""

"""Sp(2) monodromy classification and the iteration formulae for brake orbits."""

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from loguru import logger

from app.core.errors import AsymmetricMatrix, DegenerateIterate, DegenerateOrbit, UnsupportedClass
from app.models.numbers import HalfInt, RationalLike, parse_rational
from app.models.orbit import (
    CanonicalForm,
    Classification,
    HalfPeriodIndices,
    IterationRow,
    OrbitClass,
    OrbitSpec,
    QuotientKind,
    QuotientPoint,
    Sp2Matrix,
)


def make_orbit(orbit_class: Union[OrbitClass, str], seed: Union[RationalLike, HalfInt]) -> OrbitSpec:
    """Validated OrbitSpec from a class tag and its seed (theta or mu1)."""
    orbit_class = OrbitClass(orbit_class)
    if orbit_class.is_elliptic:
        if isinstance(seed, HalfInt):
            seed = seed.value
        return OrbitSpec(orbit_class=orbit_class, theta=parse_rational(seed))
    return OrbitSpec(orbit_class=orbit_class, mu1=HalfInt.of(seed))


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


# Monodromy


def monodromy_from_half_period(h: Sp2Matrix) -> Sp2Matrix:
    """Full-period monodromy N H^-1 N H of a brake orbit with half-period matrix H."""
    vw = h.b * h.c
    return Sp2Matrix.of(1 + 2 * vw, 2 * h.b * h.d, 2 * h.a * h.c, 1 + 2 * vw)


def _rational_angle(a: Fraction, b: Fraction) -> Optional[Fraction]:
    # cos(2 pi t) rational with t rational only for cos in {0, 1/2, -1/2} off the axis
    upper = {Fraction(0): Fraction(1, 4), Fraction(1, 2): Fraction(1, 6), Fraction(-1, 2): Fraction(1, 3)}
    if a not in upper:
        return None
    # b = -sin, so b < 0 puts the angle in (0, 1/2)
    return upper[a] if b < 0 else 1 - upper[a]


def classify_monodromy(m: Sp2Matrix) -> Tuple[OrbitClass, Optional[Fraction]]:
    """Orbit class of a symmetric monodromy, plus its angle mod 1 when elliptic and rational."""
    if m.a != m.d:
        raise AsymmetricMatrix(f"diagonal entries differ: a={m.a}, d={m.d}")
    a = m.a
    if a == 1 or a == -1:
        raise DegenerateOrbit(f"monodromy with a={a} has eigenvalue {a}")
    if a > 1:
        orbit_class = OrbitClass.POS_HYP_ONE if m.b < 0 else OrbitClass.POS_HYP_TWO
        return orbit_class, None
    if a < -1:
        orbit_class = OrbitClass.NEG_HYP_ONE if m.b > 0 else OrbitClass.NEG_HYP_TWO
        return orbit_class, None
    return OrbitClass.ELLIPTIC, _rational_angle(a, m.b)


# (sign v, sign w, sign x) once H is normalised to u > 0
_HALF_PERIOD_SIGNS: Dict[Tuple[int, int, int], OrbitClass] = {
    (-1, -1, 1): OrbitClass.POS_HYP_ONE,
    (1, 1, 1): OrbitClass.POS_HYP_TWO,
    (-1, 1, -1): OrbitClass.NEG_HYP_ONE,
    (1, -1, -1): OrbitClass.NEG_HYP_TWO,
}


def classify_half_period(h: Sp2Matrix) -> OrbitClass:
    """Orbit class read off the sign pattern of the half-period matrix H = (u v; w x)."""
    vw = h.b * h.c
    if vw == 0:
        raise DegenerateOrbit("half-period matrix needs v != 0 and w != 0")
    if vw == -1:
        raise DegenerateOrbit("vw = -1 gives monodromy eigenvalue -1")
    if -1 < vw < 0:
        return OrbitClass.ELLIPTIC
    # ux = 1 + vw is nonzero here, and H, -H describe the same orbit
    if h.a < 0:
        h = -h
    pattern = (_sign(h.b), _sign(h.c), _sign(h.d))
    orbit_class = _HALF_PERIOD_SIGNS.get(pattern)
    if orbit_class is None:
        raise DegenerateOrbit(f"sign pattern {pattern} matches no hyperbolic class")
    return orbit_class


def canonical_form(m: Sp2Matrix) -> Tuple[CanonicalForm, QuotientPoint]:
    """Canonical representative of M under diagonal conjugation and its quotient point."""
    orbit_class, angle = classify_monodromy(m)
    a = m.a
    form = CanonicalForm(a=a, b_sign=_sign(m.b), c_sign=_sign(m.c), off_diagonal_squared=abs(a * a - 1))
    if orbit_class.is_elliptic:
        point = QuotientPoint(kind=QuotientKind.CIRCLE, angle=angle, cos=a, sin_sign=-_sign(m.b))
    else:
        kind = QuotientKind.POS_SPIKE if orbit_class.is_positive else QuotientKind.NEG_SPIKE
        point = QuotientPoint(kind=kind, y_squared=a * a - 1, y_sign=_sign(m.b))
    return form, point


def classify(matrix: Sp2Matrix, half: bool = False) -> Classification:
    """Classification record for a monodromy, or for a half-period matrix when ``half`` is set."""
    monodromy = monodromy_from_half_period(matrix) if half else matrix
    orbit_class, _ = classify_monodromy(monodromy)
    form, point = canonical_form(monodromy)
    return Classification(
        orbit_class=orbit_class,
        canonical_form=form,
        canonical_matrix=form.matrix(),
        quotient_point=point,
    )


# Iteration formulae


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"iterate must be a positive integer, got {k}")


def _elliptic_floor(spec: OrbitSpec, k: int) -> int:
    k_theta = k * spec.theta
    if k_theta.denominator == 1:
        raise DegenerateIterate(f"{spec.label()} iterate {k} has integral rotation {k_theta}")
    return math.floor(k_theta)


def mu1(spec: OrbitSpec, k: int = 1) -> HalfInt:
    """mu1 of the k-th iterate."""
    _check_k(k)
    match spec.orbit_class:
        case OrbitClass.ELLIPTIC:
            return HalfInt(2 * _elliptic_floor(spec, k) + 1)
        case OrbitClass.NEG_HYP_ONE:
            return HalfInt(k * spec.mu1.twice + (1 if k % 2 == 0 else 0))
        case OrbitClass.NEG_HYP_TWO:
            return HalfInt(k * spec.mu1.twice - (1 if k % 2 == 0 else 0))
        case OrbitClass.POS_HYP_ONE:
            return HalfInt(k * spec.mu1.twice + 1 - k)
        case OrbitClass.POS_HYP_TWO:
            return HalfInt(k * spec.mu1.twice + k - 1)


def mu_cz(spec: OrbitSpec, k: int = 1) -> int:
    """Conley-Zehnder index of the k-th iterate."""
    _check_k(k)
    match spec.orbit_class:
        case OrbitClass.ELLIPTIC:
            return 2 * _elliptic_floor(spec, k) + 1
        case OrbitClass.NEG_HYP_ONE | OrbitClass.NEG_HYP_TWO:
            return k * spec.mu1.twice
        case OrbitClass.POS_HYP_ONE:
            return k * spec.mu1.twice - k
        case OrbitClass.POS_HYP_TWO:
            return k * spec.mu1.twice + k


def mu2(spec: OrbitSpec, k: int = 1) -> HalfInt:
    return HalfInt.integer(mu_cz(spec, k)) - mu1(spec, k)


def half_period_indices(spec: OrbitSpec) -> HalfPeriodIndices:
    if spec.orbit_class.is_elliptic:
        raise UnsupportedClass("half-period indices are only tabulated for hyperbolic orbits")
    i = (spec.mu1.twice - 1) // 2
    quadruple = {
        OrbitClass.NEG_HYP_ONE: (i, i, i + 1, i),
        OrbitClass.NEG_HYP_TWO: (i, i, i, i + 1),
        OrbitClass.POS_HYP_ONE: (i, i - 1, i, i),
        OrbitClass.POS_HYP_TWO: (i, i + 1, i + 1, i + 1),
    }[spec.orbit_class]
    indices = HalfPeriodIndices(iL0=quadruple[0], iL1=quadruple[1], iL0_sqrt=quadruple[2], iL1_sqrt=quadruple[3])
    assert mu_cz(spec, 1) == 1 + indices.iL0 + indices.iL1
    return indices


def reverse(spec: OrbitSpec) -> OrbitSpec:
    """The orbit traversed backwards: the monodromy is inverted."""
    if spec.orbit_class.is_elliptic:
        return OrbitSpec(orbit_class=OrbitClass.ELLIPTIC, theta=-spec.theta)
    return OrbitSpec(orbit_class=spec.orbit_class.swapped(), mu1=-spec.mu1)


def iterate(spec: OrbitSpec, m: int) -> OrbitSpec:
    """The m-th iterate as a brake orbit in its own right."""
    _check_k(m)
    if m == 1:
        return spec
    if spec.orbit_class.is_elliptic:
        _elliptic_floor(spec, m)
        return OrbitSpec(orbit_class=OrbitClass.ELLIPTIC, theta=m * spec.theta)
    orbit_class = spec.orbit_class
    if orbit_class.is_negative and m % 2 == 0:
        orbit_class = OrbitClass.POS_HYP_ONE if orbit_class.is_type_one else OrbitClass.POS_HYP_TWO
    return OrbitSpec(orbit_class=orbit_class, mu1=mu1(spec, m))


def iteration_table(spec: OrbitSpec, ks: Iterable[int]) -> List[IterationRow]:
    rows = []
    for k in ks:
        try:
            rows.append(IterationRow(k=k, mu1=mu1(spec, k), mu2=mu2(spec, k), mu_cz=mu_cz(spec, k)))
        except DegenerateIterate:
            logger.debug(f"{spec.label()}: iterate {k} is degenerate")
            rows.append(IterationRow(k=k, degenerate=True))
    return rows

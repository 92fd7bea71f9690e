"""Real and non-Real Fredholm indices, and the closed forms for covers of trivial cylinders."""

from fractions import Fraction
from typing import List, Sequence

from loguru import logger

from app.calculus.orbits import mu1, mu_cz
from app.core.errors import (
    BalanceViolation,
    DegenerateIterate,
    HypothesisViolation,
    IntegralityError,
    ParityViolation,
    UnsupportedClass,
)
from app.models.curve import CurveConfig, DoubledCurve, OrbitEnd, ThetaIndex, TrivialCylinderCover
from app.models.numbers import HalfInt, half_sum
from app.models.orbit import OrbitClass, OrbitSpec


def euler_characteristic(cfg: CurveConfig) -> int:
    return 2 - 2 * cfg.genus - len(cfg.sym_pos) - len(cfg.sym_neg) - 2 * (len(cfg.pair_pos) + len(cfg.pair_neg))


def _as_integer(value: HalfInt, what: str) -> int:
    if not value.is_integer():
        raise IntegralityError(f"{what} evaluated to {value}, expected an integer")
    return int(value)


def ind_real(cfg: CurveConfig) -> int:
    """Fredholm index of a Real curve.

    -chi/2 + c1 + sum mu1(symmetric +) - sum mu1(symmetric -)
    + sum mu_CZ(pairs +) - sum mu_CZ(pairs -)
    """
    total = HalfInt(-euler_characteristic(cfg)) + cfg.c1
    total = total + half_sum(mu1(end.orbit, end.mult) for end in cfg.sym_pos)
    total = total - half_sum(mu1(end.orbit, end.mult) for end in cfg.sym_neg)
    total = total + sum(mu_cz(end.orbit, end.mult) for end in cfg.pair_pos)
    total = total - sum(mu_cz(end.orbit, end.mult) for end in cfg.pair_neg)
    return _as_integer(total, "ind_real")


def ind_nonsymmetric(genus: int, c1: int, pos: Sequence[OrbitEnd], neg: Sequence[OrbitEnd]) -> int:
    """Fredholm index -chi + 2 c1 + sum mu_CZ(+) - sum mu_CZ(-), every puncture counted once."""
    chi = 2 - 2 * genus - len(pos) - len(neg)
    return -chi + 2 * c1 + sum(mu_cz(e.orbit, e.mult) for e in pos) - sum(mu_cz(e.orbit, e.mult) for e in neg)


def doubled(cfg: CurveConfig) -> DoubledCurve:
    """The curve seen without its real structure: each pair becomes two punctures."""
    if cfg.sym_pos or cfg.sym_neg:
        raise HypothesisViolation("doubling needs a curve without symmetric punctures")
    return DoubledCurve(
        genus=cfg.genus,
        c1=cfg.c1,
        pos=[end for end in cfg.pair_pos for _ in range(2)],
        neg=[end for end in cfg.pair_neg for _ in range(2)],
    )


# Covers of trivial cylinders


def check_cover_ends(a: Sequence[int], b: Sequence[int], c: Sequence[int], d: Sequence[int]) -> None:
    odd_top = sum(1 for x in a if x % 2)
    odd_bottom = sum(1 for x in b if x % 2)
    if (odd_top - odd_bottom) % 2:
        raise ParityViolation(f"{odd_top} odd positive ends against {odd_bottom} odd negative ends")
    top = sum(a) + 2 * sum(c)
    bottom = sum(b) + 2 * sum(d)
    if top != bottom:
        raise BalanceViolation(f"positive multiplicity {top} != negative multiplicity {bottom}")


def check_cover(cover: TrivialCylinderCover) -> None:
    check_cover_ends(cover.a, cover.b, cover.c, cover.d)


def trivial_cover_config(cover: TrivialCylinderCover) -> CurveConfig:
    """The cover as a CurveConfig with c1 = 0 in the orbit's trivialization."""

    def ends(mults: List[int]) -> List[OrbitEnd]:
        return [OrbitEnd(orbit=cover.base, mult=m) for m in mults]

    return CurveConfig(
        genus=cover.genus,
        c1=0,
        sym_pos=ends(cover.a),
        sym_neg=ends(cover.b),
        pair_pos=ends(cover.c),
        pair_neg=ends(cover.d),
    )


def ind_theta(theta: Fraction, a: Sequence[int], b: Sequence[int], c: Sequence[int], d: Sequence[int]) -> ThetaIndex:
    top = sum(a) + 2 * sum(c)
    bottom = sum(b) + 2 * sum(d)
    if top != bottom:
        raise BalanceViolation(f"positive multiplicity {top} != negative multiplicity {bottom}")
    p, q = theta.numerator, theta.denominator
    for x in (*a, *b, *c, *d):
        if x % q == 0:
            raise DegenerateIterate(f"multiplicity {x} is degenerate for theta={theta}")

    # ceil(x p / q) = -floor(-x p / q)
    ceilings = -sum((-x * p) // q for x in a) - 2 * sum((-x * p) // q for x in c)
    floors = sum((x * p) // q for x in b) + 2 * sum((x * p) // q for x in d)
    total = top * p
    equality = ceilings == -((-total) // q) and floors == total // q
    return ThetaIndex(value=ceilings - floors - 1, equality=equality)


def _hyperbolic_cover_index(orbit_class: OrbitClass, genus: int, a: Sequence[int], b: Sequence[int], c: Sequence[int], d: Sequence[int]) -> int:
    k, l = len(a), len(b)
    k_odd = sum(1 for x in a if x % 2)
    l_odd = sum(1 for x in b if x % 2)
    shared = genus + len(c) + len(d) - 1
    match orbit_class:
        case OrbitClass.POS_HYP_ONE:
            return shared + k
        case OrbitClass.POS_HYP_TWO:
            return shared + l
        case OrbitClass.NEG_HYP_ONE:
            return shared + (k - k_odd) + (k_odd + l_odd) // 2
        case OrbitClass.NEG_HYP_TWO:
            return shared + (l - l_odd) + (k_odd + l_odd) // 2
    raise UnsupportedClass(f"{orbit_class.value} is not hyperbolic")


def cover_index(
    base: OrbitSpec, genus: int, a: Sequence[int], b: Sequence[int], c: Sequence[int] = (), d: Sequence[int] = ()
) -> int:
    """Closed-form index of the cover (g; a; b; c; d) of the trivial cylinder over base."""
    check_cover_ends(a, b, c, d)
    if base.orbit_class.is_elliptic:
        return genus + ind_theta(base.theta, a, b, c, d).value
    return _hyperbolic_cover_index(base.orbit_class, genus, a, b, c, d)


def trivial_cover_index(cover: TrivialCylinderCover) -> int:
    """Index of a Real branched cover of a trivial cylinder, by the per-class closed form."""
    index = cover_index(cover.base, cover.genus, cover.a, cover.b, cover.c, cover.d)
    logger.debug(f"trivial cover over {cover.base.label()} a={cover.a} b={cover.b} c={cover.c} d={cover.d}: {index}")
    return index


def is_listed_minimum(
    orbit_class: OrbitClass, genus: int, a: Sequence[int], b: Sequence[int], c: Sequence[int] = (), d: Sequence[int] = ()
) -> bool:
    """Whether (g; a; b; c; d) is one of the listed configurations of index zero."""
    if genus or c or d:
        return False
    k, l = len(a), len(b)
    k_odd = sum(1 for x in a if x % 2)
    l_odd = sum(1 for x in b if x % 2)
    if k == 1 and l == 1:
        return True
    match orbit_class:
        case OrbitClass.NEG_HYP_ONE:
            return k == k_odd == 2 and l_odd == 0
        case OrbitClass.NEG_HYP_TWO:
            return l == l_odd == 2 and k_odd == 0
        case OrbitClass.POS_HYP_ONE:
            return k == 1
        case OrbitClass.POS_HYP_TWO:
            return l == 1
    return False


def trivial_cover_minimum(cover: TrivialCylinderCover) -> bool:
    return is_listed_minimum(cover.base.orbit_class, cover.genus, cover.a, cover.b, cover.c, cover.d)

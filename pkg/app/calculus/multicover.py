"""Multiple-cover index bounds, buildings and the bad-breaking exclusion."""

from collections import Counter
from typing import Iterable, List, Tuple

from loguru import logger

from app.calculus.fredholm import euler_characteristic, ind_real
from app.calculus.orbits import iterate, mu1, mu_cz
from app.core.errors import (
    DegenerateIterate,
    EndMismatch,
    HypothesisViolation,
    MalformedBuilding,
    MultiplicityMismatch,
    NotDynamicallyConvex,
    RiemannHurwitzViolation,
)
from app.models.cover import (
    BadBreakingTrace,
    Building,
    CoverAssignment,
    CoverBoundReport,
    EndCover,
    ExceptionalCounts,
    LemmaBounds,
    LemmaName,
    Mu1Bounds,
    MuCzRelation,
    PlaneBuildingReport,
)
from app.models.curve import CurveConfig, OrbitEnd
from app.models.numbers import HalfInt
from app.models.orbit import OrbitClass, OrbitSpec

THREE_HALVES = HalfInt(3)


def mu1_bounds(spec: OrbitSpec, k: int) -> Mu1Bounds:
    """k mu1 - (k-1)/2 <= mu1(beta^k) <= k mu1 + (k-1)/2."""
    base = mu1(spec, 1)
    lower = HalfInt(k * base.twice - (k - 1))
    upper = HalfInt(k * base.twice + (k - 1))
    value = mu1(spec, k)
    saturates = None
    if k > 1 and value == lower:
        saturates = "lower"
    elif k > 1 and value == upper:
        saturates = "upper"
    return Mu1Bounds(k=k, lower=lower, upper=upper, value=value, inside=lower <= value <= upper, saturates=saturates)


def mu_cz_relation(spec: OrbitSpec, k: int) -> MuCzRelation:
    residual = mu_cz(spec, k) - k * mu1(spec, 1).twice
    match spec.orbit_class:
        case OrbitClass.NEG_HYP_ONE | OrbitClass.NEG_HYP_TWO:
            expected = (0, 0)
        case OrbitClass.POS_HYP_ONE:
            expected = (-k, -k)
        case OrbitClass.POS_HYP_TWO:
            expected = (k, k)
        case _:
            expected = (1 - k, k - 1)
    return MuCzRelation(
        k=k,
        residual=residual,
        expected_min=expected[0],
        expected_max=expected[1],
        holds=expected[0] <= residual <= expected[1],
    )


# Covers


def _aligned(assign: CoverAssignment) -> Iterable[Tuple[str, OrbitEnd, EndCover]]:
    for side in ("sym_pos", "sym_neg", "pair_pos", "pair_neg"):
        ends = getattr(assign.base, side)
        covers = getattr(assign.covers, side)
        if len(ends) != len(covers):
            raise MultiplicityMismatch(f"{side}: {len(ends)} base ends but {len(covers)} covers")
        for end, cover in zip(ends, covers):
            yield side, end, cover


def check_assignment(assign: CoverAssignment) -> None:
    """Per-end multiplicity sums and Riemann-Hurwitz."""
    for side, end, cover in _aligned(assign):
        if side.startswith("pair") and cover.sym:
            raise MultiplicityMismatch(f"{side} end {end.orbit.label()} can only be covered by pairs")
        total = sum(cover.pairs) if side.startswith("pair") else cover.weight
        if total != assign.degree:
            raise MultiplicityMismatch(
                f"{side} end {end.orbit.label()} is covered with total multiplicity {total}, expected {assign.degree}"
            )
    chi_cover = euler_characteristic(covering_config(assign))
    expected = assign.degree * euler_characteristic(assign.base) - assign.branch
    if chi_cover != expected:
        raise RiemannHurwitzViolation(
            f"chi(u)={chi_cover} but D*chi(base) - B = {assign.degree}*{euler_characteristic(assign.base)}"
            f" - {assign.branch} = {expected}"
        )


def covering_config(assign: CoverAssignment) -> CurveConfig:
    """The covering curve u assembled from the assignment, with c1(u) = D c1(base)."""
    ends = {"sym_pos": [], "sym_neg": [], "pair_pos": [], "pair_neg": []}
    for side, end, cover in _aligned(assign):
        sign = side.split("_")[1]
        ends[f"sym_{sign}"].extend(OrbitEnd(orbit=end.orbit, mult=end.mult * p) for p in cover.sym)
        ends[f"pair_{sign}"].extend(OrbitEnd(orbit=end.orbit, mult=end.mult * q) for q in cover.pairs)
    return CurveConfig(genus=assign.genus, c1=assign.degree * assign.base.c1, **ends)


def _covered_class(end: OrbitEnd) -> OrbitClass:
    if end.orbit.orbit_class.is_elliptic:
        return OrbitClass.ELLIPTIC
    return iterate(end.orbit, end.mult).orbit_class


def exceptional_counts(assign: CoverAssignment) -> ExceptionalCounts:
    """Pairs over a positive hyperbolic type one end at the top, and type two at the bottom."""
    count1 = count2 = 0
    for side, end, cover in _aligned(assign):
        if side == "sym_pos" and _covered_class(end) is OrbitClass.POS_HYP_ONE:
            count1 += len(cover.pairs)
        elif side == "sym_neg" and _covered_class(end) is OrbitClass.POS_HYP_TWO:
            count2 += len(cover.pairs)
    return ExceptionalCounts(count1=count1, count2=count2)


def cover_bound(assign: CoverAssignment) -> CoverBoundReport:
    """D ind(base) + (B + 1 - D) - #1 - #2, checked against the index of the assembled cover."""
    check_assignment(assign)
    if assign.base.genus or assign.genus:
        raise HypothesisViolation("the multiple-cover bound needs genus 0 curves")
    counts = exceptional_counts(assign)
    ind_base = ind_real(assign.base)
    ind_cover = ind_real(covering_config(assign))
    bound = assign.degree * ind_base + (assign.branch + 1 - assign.degree) - counts.count1 - counts.count2
    if ind_cover < bound:
        logger.warning(f"cover bound violated: ind(u)={ind_cover} < {bound} for D={assign.degree}, B={assign.branch}")
    return CoverBoundReport(
        degree=assign.degree,
        branch=assign.branch,
        ind_base=ind_base,
        ind_cover=ind_cover,
        count1=counts.count1,
        count2=counts.count2,
        bound=bound,
        holds=ind_cover >= bound,
        equality=ind_cover == bound,
    )


def _is_cylinder(cfg: CurveConfig) -> bool:
    return cfg.genus == 0 and len(cfg.sym_pos) == 1 and len(cfg.sym_neg) == 1 and not cfg.pair_pos and not cfg.pair_neg


def lemma_a_bounds(assign: CoverAssignment, lemma: LemmaName) -> LemmaBounds:
    """Index lower bounds for covers with one positive symmetric puncture."""
    lemma = LemmaName(lemma)
    check_assignment(assign)
    u = covering_config(assign)
    base = assign.base
    hypotheses = []

    def require(condition: bool, text: str) -> None:
        if not condition:
            raise HypothesisViolation(f"{lemma.value}: {text} required")
        hypotheses.append(text)

    ind_base = ind_real(base)
    count2 = exceptional_counts(assign).count2
    if lemma is LemmaName.LEM3:
        require(_is_cylinder(u), "u is a cylinder")
        require(_is_cylinder(base) and not base.is_trivial_cylinder(), "base is a nontrivial cylinder")
        require(ind_base >= 1, "ind(base) >= 1")
        ind_cover = ind_real(u)
        return LemmaBounds(
            lemma=lemma,
            ind_cover=ind_cover,
            ind_base=ind_base,
            count2=count2,
            bound=ind_base,
            holds=1 <= ind_base <= ind_cover,
            hypotheses=hypotheses,
        )

    require(u.genus == 0 and base.genus == 0, "genus 0")
    require(len(u.sym_pos) == 1 and not u.pair_pos, "one positive symmetric puncture")
    require(ind_base >= 1, "ind(base) >= 1")
    if lemma is LemmaName.LEM1:
        require(_is_cylinder(base) and not base.is_trivial_cylinder(), "base is a nontrivial cylinder")
        bound = len(u.sym_neg) + 2 * len(u.pair_neg) - count2
    else:
        require(len(u.sym_neg) > 1, "l > 1")
        require(not _is_cylinder(base), "u is not a multiple cover of a cylinder")
        bound = 1 - count2
    ind_cover = ind_real(u)
    return LemmaBounds(
        lemma=lemma,
        ind_cover=ind_cover,
        ind_base=ind_base,
        count2=count2,
        bound=bound,
        holds=ind_cover >= bound,
        hypotheses=hypotheses,
    )


# Buildings


def _end_multiset(ends: Iterable[OrbitEnd], kind: str) -> Counter:
    return Counter((kind, end.orbit, end.mult) for end in ends)


def building_index(b: Building) -> int:
    """Sum of the component indices, after checking that consecutive levels match."""
    for depth, (upper, lower) in enumerate(zip(b.levels, b.levels[1:])):
        bottom = Counter()
        top = Counter()
        for cfg in upper:
            bottom += _end_multiset(cfg.sym_neg, "sym") + _end_multiset(cfg.pair_neg, "pair")
        for cfg in lower:
            top += _end_multiset(cfg.sym_pos, "sym") + _end_multiset(cfg.pair_pos, "pair")
        if bottom != top:
            raise EndMismatch(f"negative ends of level {depth} do not match the positive ends of level {depth + 1}")
    return sum(ind_real(cfg) for level in b.levels for cfg in level)


def is_dynamically_convex(orbits: Iterable[OrbitSpec]) -> bool:
    return all(mu1(spec, 1) >= THREE_HALVES and mu_cz(spec, 1) >= 3 for spec in orbits)


def building_orbits(b: Building) -> List[OrbitSpec]:
    seen = []
    for level in b.levels:
        for cfg in level:
            for end in cfg.sym_pos + cfg.sym_neg + cfg.pair_pos + cfg.pair_neg:
                if end.orbit not in seen:
                    seen.append(end.orbit)
    return seen


def _check_plane_building(b: Building) -> None:
    top = b.levels[0]
    if sum(len(cfg.sym_pos) for cfg in top) != 1 or any(cfg.pair_pos for cfg in top) or len(top) != 1:
        raise MalformedBuilding("the top level must be one component with a single symmetric positive puncture")
    if any(cfg.sym_neg or cfg.pair_neg for cfg in b.levels[-1]):
        raise MalformedBuilding("the bottom level must have no negative punctures")
    for depth, level in enumerate(b.levels):
        for cfg in level:
            if cfg.genus:
                raise MalformedBuilding(f"level {depth} has a component of genus {cfg.genus}")
            # a pair of positive ends hangs off a pair of negative ends one level up
            if len(cfg.sym_pos) + len(cfg.pair_pos) != 1:
                raise MalformedBuilding(f"level {depth} has a component without exactly one positive end")
        if all(cfg.is_trivial_cylinder() for cfg in level):
            raise MalformedBuilding(f"level {depth} consists of trivial cylinders only")


def plane_building_check(b: Building) -> PlaneBuildingReport:
    """Genus 0 building with one symmetric positive puncture and no negative puncture has index >= 1."""
    _check_plane_building(b)
    orbits = building_orbits(b)
    if not is_dynamically_convex(orbits):
        offenders = [spec.label() for spec in orbits if not is_dynamically_convex([spec])]
        raise NotDynamicallyConvex(f"orbits below the convexity threshold: {', '.join(offenders)}")

    index = building_index(b)
    single_plane = len(b.levels) == 1 and len(b.levels[0]) == 1
    counterexamples = []
    if index < 1:
        counterexamples.append(f"building index {index} < 1")
    if index == 1 and not single_plane:
        counterexamples.append(f"index 1 attained by a building with {len(b.levels)} levels")
    return PlaneBuildingReport(
        index=index,
        levels=len(b.levels),
        holds=index >= 1,
        equality=index == 1,
        single_plane=single_plane,
        counterexamples=counterexamples,
    )


def bad_breaking_excluded(d: int, spec: OrbitSpec) -> BadBreakingTrace:
    """Replay the inequality chain ruling out the breaking of an index-1 cylinder from beta^(d+1) to beta^d."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    base = mu1(spec, 1)
    if base < THREE_HALVES:
        raise NotDynamicallyConvex(f"{spec.label()} has mu1 = {base} < 3/2")
    try:
        top = mu1(spec, d + 1)
    except DegenerateIterate:
        top = None
    required_lower = HalfInt(2 * d * (base.twice + 1) + 3)
    allowed_upper = HalfInt((d + 1) * base.twice + d)
    lhs = HalfInt(-d - 3)
    rhs = HalfInt((d - 1) * base.twice)
    top_within = None if top is None else top <= allowed_upper
    return BadBreakingTrace(
        d=d,
        mu1=base,
        mu1_top=top,
        required_lower=required_lower,
        allowed_upper=allowed_upper,
        lhs=lhs,
        rhs=rhs,
        top_within_upper=top_within,
        contradiction=allowed_upper < required_lower and lhs < rhs and top_within is not False,
    )

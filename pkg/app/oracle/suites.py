"""Replays of the index statements over bounded instance spaces.

Each suite checks a closed form against the brute-force enumerators and
collects every violation as a counterexample string.
"""

from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Iterator, List, Sequence

from loguru import logger

from app.calculus.ech import lattice_partition, verify_rech
from app.calculus.fredholm import cover_index, is_listed_minimum
from app.calculus.multicover import bad_breaking_excluded, cover_bound, lemma_a_bounds, mu1_bounds, mu_cz_relation, plane_building_check
from app.calculus.orbits import classify_half_period, classify_monodromy, half_period_indices, make_orbit, monodromy_from_half_period, mu_cz
from app.core.errors import DegenerateIterate, HypothesisViolation, ParityViolation
from app.models.cover import LemmaName
from app.models.curve import CurveConfig, OrbitEnd
from app.models.orbit import OrbitClass, OrbitSpec
from app.models.query_params import EnumBounds, Suite
from app.models.reports import SuiteResult
from app.oracle.enumerate import (
    check_iteration,
    direct_cover_index,
    enumerate_buildings,
    enumerate_cover_assignments,
    enumerate_trivial_covers,
    index_table,
    min_rech,
    sample_half_period_matrices,
)

HYPERBOLIC_SEEDS = ("1/2", "-1/2", "3/2", "-3/2", "5/2")
HYPERBOLIC_CLASSES = (OrbitClass.NEG_HYP_ONE, OrbitClass.NEG_HYP_TWO, OrbitClass.POS_HYP_ONE, OrbitClass.POS_HYP_TWO)
SAMPLE_DENOMINATOR = 30


# Orbit pools


def hyperbolic_specs(seeds: Sequence[str] = HYPERBOLIC_SEEDS) -> List[OrbitSpec]:
    return [make_orbit(orbit_class, seed) for orbit_class in HYPERBOLIC_CLASSES for seed in seeds]


def elliptic_specs(max_denominator: int, low: int = 0, high: int = 1) -> List[OrbitSpec]:
    """Elliptic orbits with theta = p/q in lowest terms, low < theta < high, q <= max_denominator."""
    specs = []
    for q in range(2, max_denominator + 1):
        for p in range(low * q + 1, high * q):
            if gcd(p, q) == 1:
                specs.append(make_orbit(OrbitClass.ELLIPTIC, Fraction(p, q)))
    return specs


def _label(spec: OrbitSpec, **where) -> str:
    extra = ", ".join(f"{key}={value}" for key, value in where.items())
    return f"{spec.label()}, {extra}" if extra else spec.label()


def _cover_label(genus: int, a: Sequence[int], b: Sequence[int], c: Sequence[int], d: Sequence[int]) -> str:
    return f"g={genus} a={list(a)} b={list(b)} c={list(c)} d={list(d)}"


# Suites


def ech_lemma_suite(bounds: EnumBounds) -> SuiteResult:
    """Every cover of a trivial cylinder has index >= 0; the closed forms agree with the direct index."""
    checked = skipped = 0
    counterexamples = []
    minima: Dict[str, int] = {}
    specs = hyperbolic_specs() + elliptic_specs(bounds.cover_theta_denominator)
    for spec in specs:
        table = index_table(spec, bounds.max_total_multiplicity)
        for genus, a, b, c, d in enumerate_trivial_covers(spec, bounds):
            try:
                closed = cover_index(spec, genus, a, b, c, d)
                direct = direct_cover_index(table, genus, a, b, c, d)
            except (ParityViolation, DegenerateIterate):
                skipped += 1
                continue
            checked += 1
            if closed != direct:
                counterexamples.append(f"{spec.label()} {_cover_label(genus, a, b, c, d)}: closed form {closed} != direct index {direct}")
            if closed < 0:
                counterexamples.append(f"{spec.label()} {_cover_label(genus, a, b, c, d)}: index {closed} < 0")
            if is_listed_minimum(spec.orbit_class, genus, a, b, c, d):
                if closed != 0:
                    counterexamples.append(f"{spec.label()} {_cover_label(genus, a, b, c, d)}: listed minimum has index {closed}")
                minima[spec.label()] = minima.get(spec.label(), 0) + 1
    missing = [spec.label() for spec in specs if spec.label() not in minima]
    for label in missing:
        counterexamples.append(f"{label}: no index-0 configuration enumerated")
    return SuiteResult(
        suite=Suite.ECH_LEMMA,
        checked=checked,
        skipped=skipped,
        counterexamples=counterexamples,
        details={"orbits": len(specs), "minima_attained": sum(minima.values())},
    )


def partition_suite(bounds: EnumBounds) -> SuiteResult:
    """The partition inequality is sharp exactly at the stated partition, checked against the brute-force minimum."""
    checked = skipped = 0
    counterexamples = []
    specs = hyperbolic_specs() + elliptic_specs(bounds.theta_denominator_bound)
    for spec in specs:
        for n in range(1, bounds.max_n + 1):
            if spec.orbit_class.is_elliptic and n >= spec.theta.denominator:
                skipped += bounds.max_n - n + 1
                break
            report = verify_rech(spec, n)
            oracle = min_rech(spec, n)
            checked += 1
            counterexamples.extend(f"{_label(spec, n=n)}: {text}" for text in report.counterexamples)
            if oracle.min != report.min:
                counterexamples.append(f"{_label(spec, n=n)}: brute-force minimum {oracle.min} != {report.min}")
            if oracle.argmin != [report.expected]:
                counterexamples.append(
                    f"{_label(spec, n=n)}: brute-force minimizers {[str(p) for p in oracle.argmin]}"
                    f" != ({report.expected})"
                )
            if not report.strict_elsewhere:
                counterexamples.append(f"{_label(spec, n=n)}: inequality not strict off {report.expected}")
            if spec.orbit_class.is_elliptic and len(oracle.argmin) == 1:
                hull = lattice_partition(spec.theta, n)
                if hull != oracle.argmin[0]:
                    counterexamples.append(f"{_label(spec, n=n)}: lattice path gives {hull}, minimizer {oracle.argmin[0]}")
    return SuiteResult(
        suite=Suite.PARTITION,
        checked=checked,
        skipped=skipped,
        counterexamples=counterexamples,
        details={"orbits": len(specs), "max_n": bounds.max_n},
    )


def _cover_bases(pool: Sequence[OrbitSpec]) -> Iterator[CurveConfig]:
    """Genus 0 bases with at most three ends."""
    shapes = [(1, 0, 0, 0), (1, 1, 0, 0), (1, 2, 0, 0), (2, 1, 0, 0), (1, 0, 0, 1), (1, 1, 0, 1), (0, 0, 1, 1)]
    for spec in pool:
        end = OrbitEnd(orbit=spec, mult=1)
        for shape in shapes:
            sym_pos, sym_neg, pair_pos, pair_neg = ([end] * count for count in shape)
            yield CurveConfig(sym_pos=sym_pos, sym_neg=sym_neg, pair_pos=pair_pos, pair_neg=pair_neg)
    for top in pool:
        for bottom in pool:
            yield CurveConfig(sym_pos=[OrbitEnd(orbit=top, mult=2)], sym_neg=[OrbitEnd(orbit=bottom, mult=1)])


def cover_pool() -> List[OrbitSpec]:
    return [
        make_orbit(OrbitClass.NEG_HYP_ONE, "3/2"),
        make_orbit(OrbitClass.NEG_HYP_TWO, "1/2"),
        make_orbit(OrbitClass.POS_HYP_ONE, "1/2"),
        make_orbit(OrbitClass.POS_HYP_TWO, "3/2"),
        make_orbit(OrbitClass.ELLIPTIC, "5/17"),
    ]


def multicover_suite(bounds: EnumBounds) -> SuiteResult:
    """ind(u) >= D ind(base) + (B + 1 - D) - #1 - #2 for every enumerated cover, with the derived lemma bounds."""
    checked = skipped = 0
    counterexamples = []
    identity_equalities = 0
    lemma_checked = {lemma.value: 0 for lemma in LemmaName}
    for base in _cover_bases(cover_pool()):
        for degree in range(1, bounds.max_degree + 1):
            for assign in enumerate_cover_assignments(base, degree, bounds):
                try:
                    report = cover_bound(assign)
                except DegenerateIterate:
                    skipped += 1
                    continue
                checked += 1
                if not report.holds:
                    counterexamples.append(
                        f"D={degree} B={assign.branch} base={base.model_dump_json()}: ind(u)={report.ind_cover} < {report.bound}"
                    )
                if degree == 1 and assign.branch == 0 and report.equality:
                    identity_equalities += 1
                for lemma in LemmaName:
                    try:
                        bounds_report = lemma_a_bounds(assign, lemma)
                    except HypothesisViolation:
                        continue
                    lemma_checked[lemma.value] += 1
                    if not bounds_report.holds:
                        counterexamples.append(
                            f"{lemma.value} D={degree} base={base.model_dump_json()}:"
                            f" ind(u)={bounds_report.ind_cover} < {bounds_report.bound}"
                        )
    if checked and not identity_equalities:
        counterexamples.append("no equality witnessed at D=1, B=0")
    return SuiteResult(
        suite=Suite.MULTICOVER,
        checked=checked,
        skipped=skipped,
        counterexamples=counterexamples,
        details={"identity_equalities": identity_equalities, "lemmas": lemma_checked},
    )


def building_pool() -> List[OrbitSpec]:
    return [
        make_orbit(OrbitClass.NEG_HYP_ONE, "3/2"),
        make_orbit(OrbitClass.POS_HYP_TWO, "3/2"),
        make_orbit(OrbitClass.ELLIPTIC, "13/10"),
    ]


def buildings_suite(bounds: EnumBounds) -> SuiteResult:
    """Dynamically convex buildings of genus 0 components with one symmetric top end have index >= 1, with equality only for planes."""
    checked = 0
    counterexamples = []
    single_planes = with_pairs = 0
    for building in enumerate_buildings(building_pool(), bounds):
        report = plane_building_check(building)
        checked += 1
        if any(cfg.pair_neg for level in building.levels for cfg in level):
            with_pairs += 1
        if report.equality and report.single_plane:
            single_planes += 1
        for text in report.counterexamples:
            counterexamples.append(f"{building.model_dump_json()}: {text}")
    return SuiteResult(
        suite=Suite.BUILDINGS,
        checked=checked,
        counterexamples=counterexamples,
        details={"index_one_planes": single_planes, "with_pair_ends": with_pairs},
    )


def _convex_specs(bounds: EnumBounds) -> List[OrbitSpec]:
    seeds = [str(Fraction(2 * j + 1, 2)) for j in range(1, 11)]
    return hyperbolic_specs(seeds) + elliptic_specs(bounds.cover_theta_denominator, low=1, high=11)


def bad_breaking_suite(bounds: EnumBounds) -> SuiteResult:
    """The index-1 cylinder from beta^(d+1) to beta^d cannot break, for every d and convex orbit."""
    checked = 0
    counterexamples = []
    specs = _convex_specs(bounds)
    for spec in specs:
        for d in range(1, bounds.max_d + 1):
            trace = bad_breaking_excluded(d, spec)
            checked += 1
            if not trace.contradiction:
                counterexamples.append(
                    f"{_label(spec, d=d)}: {trace.allowed_upper} >= {trace.required_lower} or {trace.lhs} >= {trace.rhs}"
                    f" or mu1 of the iterate {trace.mu1_top} above {trace.allowed_upper}"
                )
    return SuiteResult(
        suite=Suite.BAD_BREAKING,
        checked=checked,
        counterexamples=counterexamples,
        details={"orbits": len(specs), "max_d": bounds.max_d},
    )


def iterate_bounds_suite(bounds: EnumBounds) -> SuiteResult:
    """mu1 of an iterate stays within (k-1)/2 of k mu1, and mu_CZ - 2k mu1 follows the class rule."""
    checked = skipped = 0
    counterexamples = []
    saturation = {"pos-hyp-1 lower": 0, "pos-hyp-2 upper": 0}
    specs = hyperbolic_specs() + elliptic_specs(bounds.theta_denominator_bound)
    for spec in specs:
        for k in range(1, bounds.max_k + 1):
            try:
                window = mu1_bounds(spec, k)
                relation = mu_cz_relation(spec, k)
            except DegenerateIterate:
                skipped += 1
                continue
            checked += 1
            if not window.inside:
                counterexamples.append(f"{_label(spec, k=k)}: mu1 {window.value} outside [{window.lower}, {window.upper}]")
            if not relation.holds:
                counterexamples.append(
                    f"{_label(spec, k=k)}: residual {relation.residual} outside"
                    f" [{relation.expected_min}, {relation.expected_max}]"
                )
            if spec.orbit_class is OrbitClass.POS_HYP_ONE and window.saturates == "lower":
                saturation["pos-hyp-1 lower"] += 1
            if spec.orbit_class is OrbitClass.POS_HYP_TWO and window.saturates == "upper":
                saturation["pos-hyp-2 upper"] += 1
    if bounds.max_k > 1:
        counterexamples.extend(f"saturation {case} never witnessed" for case, count in saturation.items() if not count)
    return SuiteResult(
        suite=Suite.ITERATE_BOUNDS,
        checked=checked,
        skipped=skipped,
        counterexamples=counterexamples,
        details={"saturation": saturation},
    )


def iteration_suite(bounds: EnumBounds) -> SuiteResult:
    """mu_CZ = mu1 + mu2, |mu1 - mu2| <= 1 and the hyperbolic linear growth, for every admissible iterate."""
    checked = 0
    counterexamples = []
    specs = hyperbolic_specs() + elliptic_specs(bounds.theta_denominator_bound)
    for spec in specs:
        count, violations = check_iteration(spec, bounds.max_k)
        checked += count
        counterexamples.extend(violations)
        if spec.orbit_class.is_hyperbolic:
            indices = half_period_indices(spec)
            if mu_cz(spec, 1) != 1 + indices.iL0 + indices.iL1:
                counterexamples.append(f"{spec.label()}: half-period indices {indices} do not add up to mu_cz")
    return SuiteResult(
        suite=Suite.ITERATION,
        checked=checked,
        skipped=len(specs) * bounds.max_k - checked,
        counterexamples=counterexamples,
        details={"orbits": len(specs)},
    )


def classification_suite(bounds: EnumBounds) -> SuiteResult:
    """Half-period sign table against the monodromy classification, on seeded random matrices."""
    counterexamples = []
    counts: Dict[str, int] = {orbit_class.value: 0 for orbit_class in OrbitClass}
    samples = sample_half_period_matrices(bounds.samples, SAMPLE_DENOMINATOR, bounds.seed)
    for h in samples:
        m = monodromy_from_half_period(h)
        orbit_class, _ = classify_monodromy(m)
        counts[orbit_class.value] += 1
        entries = "(" + ", ".join(str(x) for x in h.entries()) + ")"
        if classify_half_period(h) != orbit_class:
            counterexamples.append(f"H={entries}: half-period table {classify_half_period(h).value} != {orbit_class.value}")
        inverse_class, _ = classify_monodromy(m.inverse())
        if inverse_class != orbit_class.swapped():
            counterexamples.append(f"H={entries}: inverse classifies as {inverse_class.value}")
        if classify_half_period(-h) != classify_half_period(h):
            counterexamples.append(f"H={entries}: -H classifies differently")
    return SuiteResult(
        suite=Suite.CLASSIFICATION,
        checked=len(samples),
        counterexamples=counterexamples,
        details={"classes": counts, "seed": bounds.seed},
    )


SUITES: Dict[Suite, Callable[[EnumBounds], SuiteResult]] = {
    Suite.ECH_LEMMA: ech_lemma_suite,
    Suite.PARTITION: partition_suite,
    Suite.MULTICOVER: multicover_suite,
    Suite.BUILDINGS: buildings_suite,
    Suite.BAD_BREAKING: bad_breaking_suite,
    Suite.ITERATE_BOUNDS: iterate_bounds_suite,
    Suite.ITERATION: iteration_suite,
    Suite.CLASSIFICATION: classification_suite,
}


def run_suite(suite: Suite, bounds: EnumBounds) -> SuiteResult:
    suite = Suite(suite)
    logger.info(f"verify {suite.value}: start with {bounds.model_dump()}")
    result = SUITES[suite](bounds)
    if result.counterexamples:
        logger.warning(f"verify {suite.value}: {len(result.counterexamples)} counterexamples")
    logger.info(f"verify {suite.value}: checked {result.checked}, skipped {result.skipped}")
    return result

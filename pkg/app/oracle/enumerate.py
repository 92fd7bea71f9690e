"""Brute-force enumerators.

Nothing here uses the closed forms of ``app.calculus``; only the orbit
iteration ``mu1`` / ``mu_cz`` and plain exact arithmetic.
"""

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from app.calculus.orbits import iterate, mu1, mu2, mu_cz
from app.core.errors import DegenerateIterate, IntegralityError
from app.models.cover import Building, CoverAssignment, EndCover, EndCovers
from app.models.curve import CurveConfig, OrbitEnd
from app.models.ech import Partition
from app.models.numbers import HalfInt
from app.models.orbit import OrbitSpec, Sp2Matrix
from app.models.query_params import EnumBounds


# Partitions


def descending_parts(n: int, cap: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n as descending tuples, in descending-lexicographic order; n = 0 gives ()."""
    if cap is None:
        cap = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in descending_parts(n - first, first):
            yield (first, *rest)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for parts in descending_parts(n):
        yield Partition(parts=parts)


@lru_cache(maxsize=None)
def _count(n: int, largest: int) -> int:
    if n == 0:
        return 1
    if largest == 0:
        return 0
    if largest > n:
        return _count(n, n)
    return _count(n - largest, largest) + _count(n, largest - 1)


def count_partitions(n: int) -> int:
    """Number of partitions of n by the largest-part recursion."""
    return _count(n, n)


# Covers of trivial cylinders


def _sides(total: int, max_parts: int, sym_required: bool = True) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(symmetric, pair) multiplicities with sum(symmetric) + 2 sum(pair) = total."""
    top = (total - 1) // 2 if sym_required else total // 2
    for pair_weight in range(top + 1):
        for sym in descending_parts(total - 2 * pair_weight):
            if len(sym) > max_parts:
                continue
            for pairs in descending_parts(pair_weight):
                if len(pairs) <= max_parts:
                    yield sym, pairs


CoverEnds = Tuple[int, Tuple[int, ...], Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]


def enumerate_trivial_covers(spec: OrbitSpec, bounds: EnumBounds) -> Iterator[CoverEnds]:
    """Balanced covers (g, a, b, c, d) of the trivial cylinder over spec within bounds, as plain tuples."""
    for total in range(1, bounds.max_total_multiplicity + 1):
        sides = list(_sides(total, bounds.max_parts))
        for genus in range(bounds.max_genus + 1):
            for (a, c), (b, d) in product(sides, repeat=2):
                yield genus, a, b, c, d


IndexTable = Dict[int, Optional[Tuple[int, int]]]


def index_table(spec: OrbitSpec, max_mult: int) -> IndexTable:
    """(2 mu1, mu_CZ) of the iterates 1..max_mult; None where the iterate is degenerate."""
    table: IndexTable = {}
    for m in range(1, max_mult + 1):
        try:
            table[m] = (mu1(spec, m).twice, mu_cz(spec, m))
        except DegenerateIterate:
            table[m] = None
    return table


def _lookup(table: IndexTable, m: int) -> Tuple[int, int]:
    entry = table[m]
    if entry is None:
        raise DegenerateIterate(f"iterate {m} is degenerate")
    return entry


def direct_cover_index(table: IndexTable, genus: int, a: Sequence[int], b: Sequence[int], c: Sequence[int], d: Sequence[int]) -> int:
    """-chi/2 + sum mu1(a) - sum mu1(b) + sum mu_CZ(c) - sum mu_CZ(d), with c1 = 0."""
    twice = 2 * genus - 2 + len(a) + len(b) + 2 * (len(c) + len(d))
    twice += sum(_lookup(table, x)[0] for x in a) - sum(_lookup(table, x)[0] for x in b)
    twice += 2 * (sum(_lookup(table, x)[1] for x in c) - sum(_lookup(table, x)[1] for x in d))
    if twice % 2:
        raise IntegralityError(f"index of the cover evaluated to {twice}/2")
    return twice // 2


# Partition inequality


class MinRech(BaseModel):
    min: HalfInt
    argmin: List[Partition]


def _left_side(spec: OrbitSpec, parts: Sequence[int]) -> Fraction:
    half = Fraction(1, 2)
    mus = [mu1(spec, q).value for q in parts]
    rhos = [m + half for m in mus]
    total = sum((m - r / 2 for m, r in zip(mus, rhos)), Fraction(0))
    total += half * sum(min(qi * rj, qj * ri) for qi, ri in zip(parts, rhos) for qj, rj in zip(parts, rhos))
    return total


def min_rech(spec: OrbitSpec, n: int) -> MinRech:
    """Minimum of the left side of the partition inequality over all partitions of n, with its tie set."""
    values: Dict[Tuple[int, ...], Fraction] = {parts: _left_side(spec, parts) for parts in descending_parts(n)}
    best = min(values.values())
    return MinRech(
        min=HalfInt.of(best),
        argmin=[Partition(parts=parts) for parts, value in values.items() if value == best],
    )


# Cover assignments


def _end_options(degree: int, symmetric: bool) -> List[EndCover]:
    if not symmetric:
        return [EndCover(pairs=list(q)) for q in descending_parts(degree)]
    return [EndCover(sym=list(p), pairs=list(q)) for p, q in _sides(degree, degree, sym_required=False)]


def _cover_euler(choice: Sequence[EndCover]) -> int:
    sym = sum(len(cover.sym) for cover in choice)
    pairs = sum(len(cover.pairs) for cover in choice)
    return 2 - sym - 2 * pairs


def enumerate_cover_assignments(base: CurveConfig, degree: int, bounds: Optional[EnumBounds] = None) -> Iterator[CoverAssignment]:
    """Genus 0 covers of degree D of a genus 0 base, one assignment per combination of end covers with B >= 0."""
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    sides = ("sym_pos", "sym_neg", "pair_pos", "pair_neg")
    slots = [(side, i) for side in sides for i in range(len(getattr(base, side)))]
    options = [_end_options(degree, side.startswith("sym")) for side, _ in slots]
    base_chi = 2 - 2 * base.genus - len(base.sym_pos) - len(base.sym_neg) - 2 * (len(base.pair_pos) + len(base.pair_neg))
    for choice in product(*options):
        branch = degree * base_chi - _cover_euler(choice)
        if branch < 0:
            continue
        covers: Dict[str, List[EndCover]] = {side: [] for side in sides}
        for (side, _), cover in zip(slots, choice):
            covers[side].append(cover)
        yield CoverAssignment(base=base, degree=degree, branch=branch, covers=EndCovers(**covers))


# Buildings

OpenEnd = Tuple[str, OrbitEnd]


def _negative_ends(cfg: CurveConfig) -> List[OpenEnd]:
    return [("sym", end) for end in cfg.sym_neg] + [("pair", end) for end in cfg.pair_neg]


def _component_index(cfg: CurveConfig) -> int:
    # -chi/2 + c1 + sum mu1(sym +) - sum mu1(sym -) + sum mu_CZ(pair +) - sum mu_CZ(pair -), c1 = 0
    total = HalfInt(len(cfg.sym_pos) + len(cfg.sym_neg) + 2 * (len(cfg.pair_pos) + len(cfg.pair_neg)) - 2)
    for end in cfg.sym_pos:
        total = total + mu1(end.orbit, end.mult)
    for end in cfg.sym_neg:
        total = total - mu1(end.orbit, end.mult)
    total = total + sum(mu_cz(end.orbit, end.mult) for end in cfg.pair_pos)
    total = total - sum(mu_cz(end.orbit, end.mult) for end in cfg.pair_neg)
    return int(total)


def _weight(ends: Sequence[OrbitEnd], pairs: Sequence[OrbitEnd]) -> int:
    return sum(end.mult for end in ends) + 2 * sum(end.mult for end in pairs)


def _admissible(cfg: CurveConfig) -> bool:
    """Components a generic J admits: trivial cylinders, covers of them with index >= 0, others with index >= 1."""
    try:
        index = _component_index(cfg)
    except DegenerateIterate:
        return False
    if cfg.is_trivial_cylinder():
        return True
    orbits = {end.orbit for end in cfg.positive_ends + cfg.negative_ends}
    balanced = _weight(cfg.sym_pos, cfg.pair_pos) == _weight(cfg.sym_neg, cfg.pair_neg)
    if len(orbits) == 1 and balanced:
        return index >= 0
    return index >= 1


def _components(top: OpenEnd, candidates: Sequence[OpenEnd], max_negative: int) -> List[CurveConfig]:
    kind, end = top
    found = []
    for count in range(max_negative + 1):
        for negative in combinations_with_replacement(candidates, count):
            cfg = CurveConfig(
                sym_pos=[end] if kind == "sym" else [],
                pair_pos=[end] if kind == "pair" else [],
                sym_neg=[e for k, e in negative if k == "sym"],
                pair_neg=[e for k, e in negative if k == "pair"],
            )
            if _admissible(cfg):
                found.append(cfg)
    return found


def enumerate_buildings(
    pool: Sequence[OrbitSpec],
    bounds: EnumBounds,
    max_mult: int = 2,
    max_negative: int = 2,
) -> Iterator[Building]:
    """Genus 0 tree buildings with one symmetric positive puncture and no negative puncture.

    Below the top level a component hangs off either a symmetric end or a
    pair of ends; pair ends are closed off on the next level.
    """
    candidates = [(kind, OrbitEnd(orbit=orbit, mult=m)) for kind in ("sym", "pair") for orbit in pool for m in range(1, max_mult + 1)]
    cache: Dict[OpenEnd, List[CurveConfig]] = {}

    def options(top: OpenEnd) -> List[CurveConfig]:
        if top not in cache:
            cache[top] = _components(top, candidates, max_negative)
        return cache[top]

    def grow(levels: List[List[CurveConfig]], open_ends: List[OpenEnd], punctures: int) -> Iterator[Building]:
        if not open_ends:
            yield Building(levels=levels)
            return
        if len(levels) == bounds.max_levels:
            return
        yield from fill(levels, open_ends, [], punctures)

    def fill(levels: List[List[CurveConfig]], open_ends: List[OpenEnd], level: List[CurveConfig], used: int) -> Iterator[Building]:
        if len(level) == len(open_ends):
            if all(cfg.is_trivial_cylinder() for cfg in level):
                return
            below = [open_end for cfg in level for open_end in _negative_ends(cfg)]
            yield from grow(levels + [level], below, used)
            return
        for cfg in options(open_ends[len(level)]):
            total = used + cfg.puncture_count()
            if total <= bounds.max_punctures:
                yield from fill(levels, open_ends, level + [cfg], total)

    for orbit in pool:
        for m in range(1, max_mult + 1):
            yield from grow([], [("sym", OrbitEnd(orbit=orbit, mult=m))], 0)



# Iteration and classification


def check_iteration(spec: OrbitSpec, max_k: int) -> Tuple[int, List[str]]:
    """Recheck the iteration identities up to max_k; returns (checked, violations)."""
    violations = []
    checked = 0
    base_cz = mu_cz(spec, 1)
    if mu1(spec, 1).twice % 2 == 0:
        violations.append(f"{spec.label()}: mu1 seed is an integer")
    for k in range(1, max_k + 1):
        try:
            a, b, cz = mu1(spec, k), mu2(spec, k), mu_cz(spec, k)
        except DegenerateIterate:
            continue
        checked += 1
        if HalfInt.integer(cz) != a + b:
            violations.append(f"{spec.label()}, k={k}: mu_cz {cz} != {a} + {b}")
        if abs((a - b).twice) > 2:
            violations.append(f"{spec.label()}, k={k}: |mu1 - mu2| = |{a - b}| > 1")
        if spec.orbit_class.is_hyperbolic and cz != k * base_cz:
            violations.append(f"{spec.label()}, k={k}: mu_cz {cz} != {k} * {base_cz}")
        if spec.orbit_class.is_elliptic and a != b:
            violations.append(f"{spec.label()}, k={k}: elliptic mu1 {a} != mu2 {b}")
        for j in range(1, max_k // k + 1):
            try:
                expected = mu1(spec, k * j)
            except DegenerateIterate:
                continue
            if mu1(iterate(spec, k), j) != expected:
                violations.append(f"{spec.label()}: mu1 of iterate {k} at {j} differs from mu1 at {k * j}")
    return checked, violations


def _random_rational(rng: random.Random, max_denominator: int, max_numerator: int) -> Fraction:
    while True:
        value = Fraction(rng.randint(-max_numerator, max_numerator), rng.randint(1, max_denominator))
        if value != 0:
            return value


def sample_half_period_matrices(count: int, max_denominator: int, seed: int, max_numerator: int = 30) -> List[Sp2Matrix]:
    """Seeded sample of symplectic (u v; w x) with v w not in {0, -1}; x is solved from det = 1."""
    rng = random.Random(seed)
    samples = []
    while len(samples) < count:
        u = _random_rational(rng, max_denominator, max_numerator)
        v = _random_rational(rng, max_denominator, max_numerator)
        w = _random_rational(rng, max_denominator, max_numerator)
        if v * w == -1:
            continue
        samples.append(Sp2Matrix.of(u, v, w, (1 + v * w) / u))
    return samples

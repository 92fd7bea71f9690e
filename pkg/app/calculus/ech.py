"""Real ECH index, partition conditions and the writhe and linking bounds."""

import math
from fractions import Fraction
from typing import Dict, List, Tuple

from loguru import logger

from app.calculus.orbits import mu1, reverse
from app.core.errors import NonUniqueMinimizer
from app.models.ech import Partition, RealGenerator, RechAuditRow, RechReport, RelativeClassData, WritheBound
from app.models.numbers import HALF, HalfInt, half_sum
from app.models.orbit import OrbitClass, OrbitSpec
from app.oracle.enumerate import enumerate_partitions


def _mu1_tower(generator: RealGenerator) -> HalfInt:
    return half_sum(mu1(entry.orbit, k) for entry in generator.entries for k in range(1, entry.mult + 1))


def i_rech(alpha: RealGenerator, beta: RealGenerator, z: RelativeClassData) -> HalfInt:
    """Real ECH index of a class from alpha to beta."""
    return HalfInt(z.c1) + HalfInt(z.Q) + _mu1_tower(alpha) - _mu1_tower(beta)


def rho(spec: OrbitSpec, q: int) -> int:
    """Winding number mu1(beta^q) + 1/2 of the asymptotic eigenfunction."""
    return int(mu1(spec, q) + HALF)


def rech_left(spec: OrbitSpec, p: Partition) -> HalfInt:
    """sum (mu1(q_i) - rho_i/2) + 1/2 sum_{i,j} min(q_i rho_j, q_j rho_i), over ordered pairs."""
    rhos = [rho(spec, q) for q in p.parts]
    single = half_sum(mu1(spec, q) - HalfInt(r) for q, r in zip(p.parts, rhos))
    pairs = sum(min(qi * rj, qj * ri) for qi, ri in zip(p.parts, rhos) for qj, rj in zip(p.parts, rhos))
    return single + HalfInt(pairs)


def rech_right(spec: OrbitSpec, n: int) -> HalfInt:
    return half_sum(mu1(spec, i) for i in range(1, n + 1))


def lattice_partition(theta: Fraction, n: int) -> Partition:
    """Elliptic partition from the lower convex hull of (0, 0) and (x, ceil(x theta)), 1 <= x <= n.

    Each hull edge (dx, dy) with g = gcd(dx, dy) gives g parts of size dx / g.
    """
    points = [(0, 0)] + [(x, math.ceil(x * theta)) for x in range(1, n + 1)]
    hull: List[Tuple[int, int]] = []
    for point in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it turns strictly left
            if (x2 - x1) * (point[1] - y1) - (y2 - y1) * (point[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(point)
    parts = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        g = math.gcd(x2 - x1, y2 - y1)
        parts.extend([(x2 - x1) // g] * g)
    return Partition(parts=parts)


def _elliptic_minimizer(spec: OrbitSpec, n: int) -> Partition:
    values: Dict[Partition, HalfInt] = {p: rech_left(spec, p) for p in enumerate_partitions(n)}
    best = min(values.values())
    winners = [p for p, value in values.items() if value == best]
    if len(winners) > 1:
        raise NonUniqueMinimizer(
            f"{spec.label()}, n={n}: partitions {', '.join(str(p) for p in winners)} all attain {best}"
        )
    return winners[0]


def negative_partition(spec: OrbitSpec, n: int) -> Partition:
    """Partition of n into multiplicities of the negative ends at which the index bound is sharp."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    match spec.orbit_class:
        case OrbitClass.POS_HYP_TWO:
            return Partition(parts=[1] * n)
        case OrbitClass.POS_HYP_ONE:
            return Partition(parts=[n])
        case OrbitClass.NEG_HYP_TWO:
            return Partition(parts=[2] * (n // 2) + [1] * (n % 2))
        case OrbitClass.NEG_HYP_ONE:
            return Partition(parts=[n] if n % 2 else [n - 1, 1])
    return _elliptic_minimizer(spec, n)


def positive_partition(spec: OrbitSpec, n: int) -> Partition:
    """Positive ends are the negative ends of the orbit traversed backwards."""
    return negative_partition(reverse(spec), n)


def writhe_lower_bound(spec: OrbitSpec, n: int) -> WritheBound:
    """Lower bound (n - 1) rho on the writhe of an end of multiplicity n.

    Equality needs a torus braid, which exists only when gcd(n, rho) = 1.
    """
    winding = rho(spec, n)
    return WritheBound(bound=(n - 1) * winding, equality_possible=math.gcd(n, winding) == 1)


def linking_lower_bound(spec1: OrbitSpec, q1: int, spec2: OrbitSpec, q2: int) -> int:
    return min(q1 * rho(spec2, q2), q2 * rho(spec1, q1))


def verify_rech(spec: OrbitSpec, n: int, audit: bool = False) -> RechReport:
    """Compare both sides of the partition inequality over every partition of n."""
    right = rech_right(spec, n)
    rows = []
    for p in enumerate_partitions(n):
        left = rech_left(spec, p)
        rows.append(RechAuditRow(partition=p, left=left, equality=left == right))
    counterexamples = [f"{row.partition}: left {row.left} < right {right}" for row in rows if row.left < right]

    try:
        expected = negative_partition(spec, n)
    except NonUniqueMinimizer as e:
        counterexamples.append(str(e))
        expected = min(rows, key=lambda row: row.left).partition

    equality = [row.partition for row in rows if row.equality]
    if equality != [expected]:
        counterexamples.append(
            f"equality set {[str(p) for p in equality]} differs from the partition {expected}"
        )
    strict = all(row.left > right for row in rows if row.partition != expected)
    if counterexamples:
        logger.warning(f"{spec.label()}, n={n}: {'; '.join(counterexamples)}")
    return RechReport(
        n=n,
        min=min(row.left for row in rows),
        right=right,
        equality_partitions=equality,
        expected=expected,
        strict_elsewhere=strict,
        checked=len(rows),
        counterexamples=counterexamples,
        audit=rows if audit else None,
    )

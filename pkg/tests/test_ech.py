import pytest
from pydantic import ValidationError

from app.calculus.ech import (
    i_rech,
    lattice_partition,
    linking_lower_bound,
    negative_partition,
    positive_partition,
    rech_left,
    rech_right,
    rho,
    verify_rech,
    writhe_lower_bound,
)
from app.calculus.orbits import make_orbit, mu1
from app.models.curve import OrbitEnd
from app.models.ech import Partition, RealGenerator, RelativeClassData
from app.models.numbers import HalfInt, half_sum, parse_rational
from app.models.orbit import OrbitClass


def test_partition_is_kept_descending():
    p = Partition.of(1, 3, 2)
    assert p.parts == (3, 2, 1)
    assert p.n == 6 and len(p) == 3
    assert str(p) == "(3,2,1)"
    assert p.model_dump() == [3, 2, 1]
    assert Partition.model_validate([2, 1, 3]) == p
    with pytest.raises(ValidationError):
        Partition.model_validate([])


@pytest.mark.parametrize(
    "orbit, n, expected",
    [
        ("neg-hyp-1", 6, (5, 1)),
        ("neg-hyp-1", 5, (5,)),
        ("neg-hyp-2", 5, (2, 2, 1)),
        ("pos-hyp-1", 4, (4,)),
        ("pos-hyp-2", 4, (1, 1, 1, 1)),
        (("elliptic", "1/100"), 3, (3,)),
    ],
    indirect=["orbit"],
)
def test_negative_partition(orbit, n, expected):
    assert negative_partition(orbit, n).parts == expected


def test_positive_partition_uses_the_reversed_orbit():
    assert positive_partition(make_orbit(OrbitClass.POS_HYP_ONE, "1/2"), 4).parts == (1, 1, 1, 1)
    assert positive_partition(make_orbit(OrbitClass.NEG_HYP_TWO, "1/2"), 6).parts == (5, 1)


def test_negative_partition_needs_positive_n(orbit):
    with pytest.raises(ValueError):
        negative_partition(orbit, 0)


@pytest.mark.parametrize(
    "theta, n, expected",
    [
        ("1/100", 3, (3,)),
        ("99/100", 3, (1, 1, 1)),
        ("5/17", 4, (3, 1)),
        ("1/2", 1, (1,)),
    ],
)
def test_lattice_partition(theta, n, expected):
    """test the lower hull of the points (x, ceil(x theta))."""
    assert lattice_partition(parse_rational(theta), n).parts == expected


def test_elliptic_minimum_value():
    spec = make_orbit(OrbitClass.ELLIPTIC, "1/100")
    assert rech_left(spec, Partition.of(3)) == HalfInt.of("3/2")
    assert rech_left(spec, Partition.of(2, 1)) == HalfInt.of("5/2")
    assert rech_left(spec, Partition.of(1, 1, 1)) == HalfInt.of("9/2")
    assert rech_right(spec, 3) == HalfInt.of("3/2")


@pytest.mark.parametrize(
    "orbit, n",
    [
        ("neg-hyp-1", 6),
        ("neg-hyp-2", 5),
        ("pos-hyp-1", 4),
        ("pos-hyp-2", 4),
        (("elliptic", "1/100"), 3),
    ],
    indirect=["orbit"],
)
def test_verify_rech_equality_only_at_the_expected_partition(orbit, n):
    report = verify_rech(orbit, n)
    assert report.counterexamples == []
    assert report.equality_partitions == [report.expected]
    assert report.min == report.right
    assert report.strict_elsewhere
    assert report.audit is None


def test_verify_rech_audit_rows():
    report = verify_rech(make_orbit(OrbitClass.NEG_HYP_ONE, "1/2"), 6, audit=True)
    assert report.checked == 11
    assert len(report.audit) == 11
    assert [row.partition for row in report.audit if row.equality] == [Partition.of(5, 1)]
    assert report.right == HalfInt.integer(12)


def test_writhe_and_linking_bounds():
    spec = make_orbit(OrbitClass.NEG_HYP_ONE, "1/2")
    assert rho(spec, 1) == 1
    assert rho(spec, 3) == 2
    three = writhe_lower_bound(spec, 3)
    assert three.bound == 4 and three.equality_possible
    two = writhe_lower_bound(spec, 2)
    assert two.bound == 2 and not two.equality_possible
    assert linking_lower_bound(spec, 1, spec, 2) == 2


def test_i_rech():
    """test c1 + Q plus the tower of mu1 over the positive generator."""
    beta = make_orbit(OrbitClass.NEG_HYP_ONE, "1/2")
    alpha = RealGenerator(entries=[OrbitEnd(orbit=beta, mult=2)])
    empty = RealGenerator()
    assert i_rech(alpha, empty, RelativeClassData(Q=2)) == HalfInt.integer(3)
    assert i_rech(empty, alpha, RelativeClassData(c1=4)) == HalfInt.integer(0)


def test_generator_lists_each_orbit_once():
    beta = make_orbit(OrbitClass.NEG_HYP_ONE, "1/2")
    with pytest.raises(ValidationError):
        RealGenerator(entries=[OrbitEnd(orbit=beta, mult=1), OrbitEnd(orbit=beta, mult=2)])


def shifted(orbit, s):
    if orbit.orbit_class.is_elliptic:
        return make_orbit(orbit.orbit_class, orbit.theta + s)
    return make_orbit(orbit.orbit_class, str(orbit.mu1 + s))


@pytest.mark.parametrize("shift", [-2, -1, 1, 3])
@pytest.mark.parametrize("orbit", ["elliptic", "neg-hyp-1", "neg-hyp-2", "pos-hyp-1", "pos-hyp-2"], indirect=True)
def test_trivialization_shift_keeps_the_equality_set(orbit, shift):
    """test that both sides of the inequality move by the same amount under an integer shift."""
    moved = shifted(orbit, shift)
    for n in range(1, 9):
        before = verify_rech(orbit, n, audit=True)
        after = verify_rech(moved, n, audit=True)
        assert after.equality_partitions == before.equality_partitions
        offset = after.right - before.right
        for old, new in zip(before.audit, after.audit):
            assert new.partition == old.partition
            assert new.left - old.left == offset


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("orbit", ["elliptic", "neg-hyp-1", "neg-hyp-2", "pos-hyp-1", "pos-hyp-2"], indirect=True)
def test_sharp_partition_attains_the_index_of_the_generator(orbit, n):
    """test that ends, writhe and linking at the sharp partition add up to the index of the one-orbit generator."""
    parts = negative_partition(orbit, n).parts
    ends = half_sum(mu1(orbit, q) for q in parts)
    writhe = sum(writhe_lower_bound(orbit, q).bound for q in parts)
    linking = sum(
        linking_lower_bound(orbit, parts[i], orbit, parts[j]) for i in range(len(parts)) for j in range(i + 1, len(parts))
    )
    generator = RealGenerator(entries=[OrbitEnd(orbit=orbit, mult=n)])

    assert ends + HalfInt(writhe) + linking == i_rech(generator, RealGenerator(), RelativeClassData())

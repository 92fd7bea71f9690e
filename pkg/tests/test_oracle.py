import pytest

from app.calculus.fredholm import check_cover_ends, ind_real, trivial_cover_config
from app.calculus.multicover import check_assignment, plane_building_check
from app.calculus.orbits import make_orbit
from app.core.errors import DegenerateIterate
from app.models.cover import Building
from app.models.curve import CurveConfig, OrbitEnd, TrivialCylinderCover
from app.models.ech import Partition
from app.models.numbers import HalfInt
from app.models.orbit import OrbitClass
from app.oracle.enumerate import (
    check_iteration,
    count_partitions,
    direct_cover_index,
    enumerate_buildings,
    enumerate_cover_assignments,
    enumerate_partitions,
    enumerate_trivial_covers,
    index_table,
    min_rech,
)


BETA = make_orbit(OrbitClass.NEG_HYP_ONE, "3/2")


def test_partitions_of_ten():
    partitions = list(enumerate_partitions(10))
    assert len(partitions) == 42
    assert partitions[0] == Partition.of(10)
    assert partitions[-1] == Partition.of(*[1] * 10)
    assert len(set(partitions)) == 42


@pytest.mark.parametrize("n", range(1, 21))
def test_enumeration_agrees_with_the_recursion(n):
    """test the enumerator against the largest-part recursion."""
    partitions = list(enumerate_partitions(n))
    assert len(partitions) == count_partitions(n)
    assert all(p.n == n for p in partitions)


def test_partition_counts():
    assert [count_partitions(n) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert count_partitions(30) == 5604
    with pytest.raises(ValueError):
        list(enumerate_partitions(0))


def test_trivial_covers_of_multiplicity_one(orbit, small_bounds):
    bounds = small_bounds.model_copy(update={"max_total_multiplicity": 1, "max_genus": 0})
    assert list(enumerate_trivial_covers(orbit, bounds)) == [(0, (1,), (1,), (), ())]


def test_trivial_covers_are_balanced(orbit, small_bounds):
    bounds = small_bounds.model_copy(update={"max_total_multiplicity": 2, "max_genus": 0})
    covers = list(enumerate_trivial_covers(orbit, bounds))
    assert len(covers) == 5
    for _, a, b, c, d in covers:
        check_cover_ends(a, b, c, d)


@pytest.mark.parametrize("orbit", ["elliptic", "neg-hyp-1", "neg-hyp-2", "pos-hyp-1", "pos-hyp-2"], indirect=True)
def test_direct_cover_index_agrees_with_ind_real(orbit):
    """test the table-driven index against ind_real of the assembled cover."""
    table = index_table(orbit, 4)
    for genus, a, b, c, d in [(0, (2,), (1, 1), (), ()), (1, (3,), (1,), (), (1,)), (0, (1, 1), (2,), (), ())]:
        cover = TrivialCylinderCover(base=orbit, genus=genus, a=list(a), b=list(b), c=list(c), d=list(d))
        assert direct_cover_index(table, genus, a, b, c, d) == ind_real(trivial_cover_config(cover))


def test_index_table_marks_degenerate_iterates():
    table = index_table(make_orbit(OrbitClass.ELLIPTIC, "1/3"), 4)
    assert table[3] is None
    assert table[1] == (1, 1)
    with pytest.raises(DegenerateIterate):
        direct_cover_index(table, 0, (3,), (3,), (), ())


@pytest.mark.parametrize(
    "orbit, n, expected_min, argmin",
    [
        ("neg-hyp-2", 5, "13/2", [(2, 2, 1)]),
        ("pos-hyp-2", 3, "9/2", [(1, 1, 1)]),
        ("neg-hyp-1", 6, "12", [(5, 1)]),
        (("elliptic", "1/100"), 3, "3/2", [(3,)]),
    ],
    indirect=["orbit"],
)
def test_min_rech(orbit, n, expected_min, argmin):
    result = min_rech(orbit, n)
    assert result.min == HalfInt.of(expected_min)
    assert [p.parts for p in result.argmin] == argmin


def test_cover_assignments_of_a_plane():
    plane = CurveConfig(sym_pos=[OrbitEnd(orbit=BETA, mult=1)])
    (identity,) = enumerate_cover_assignments(plane, 1)
    assert identity.branch == 0
    assert identity.covers.sym_pos[0].sym == [1]

    doubles = list(enumerate_cover_assignments(plane, 2))
    assert sorted(assign.branch for assign in doubles) == [1, 2, 2]
    for assign in doubles:
        check_assignment(assign)

    with pytest.raises(ValueError):
        list(enumerate_cover_assignments(plane, 0))


def test_buildings_start_with_the_plane(small_bounds):
    buildings = list(enumerate_buildings([BETA], small_bounds))
    assert buildings[0] == Building(levels=[[CurveConfig(sym_pos=[OrbitEnd(orbit=BETA, mult=1)])]])
    for building in buildings:
        assert plane_building_check(building).holds


def test_buildings_with_pair_ends(small_bounds):
    bounds = small_bounds.model_copy(update={"max_punctures": 5})
    buildings = list(enumerate_buildings([BETA], bounds))
    with_pairs = [b for b in buildings if any(cfg.pair_neg for level in b.levels for cfg in level)]
    assert with_pairs
    for building in with_pairs:
        report = plane_building_check(building)
        assert report.index >= 2
        assert report.counterexamples == []


@pytest.mark.parametrize("orbit", ["elliptic", "neg-hyp-1", "neg-hyp-2", "pos-hyp-1", "pos-hyp-2"], indirect=True)
def test_check_iteration(orbit):
    checked, violations = check_iteration(orbit, 20)
    assert violations == []
    expected = 19 if orbit.orbit_class is OrbitClass.ELLIPTIC else 20
    assert checked == expected

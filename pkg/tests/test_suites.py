import pytest

from app.calculus.orbits import mu1
from app.models.numbers import HalfInt
from app.models.orbit import OrbitClass
from app.models.query_params import EnumBounds, Suite
from app.oracle.suites import building_pool, cover_pool, elliptic_specs, hyperbolic_specs, run_suite

pytestmark = pytest.mark.suites


@pytest.mark.parametrize("suite", list(Suite))
def test_suite_has_no_counterexamples(suite, small_bounds):
    """test every suite replays cleanly within small bounds."""
    result = run_suite(suite, small_bounds)
    assert result.suite is suite
    assert result.checked > 0
    assert result.counterexamples == []


def test_run_suite_accepts_the_suite_name(small_bounds):
    assert run_suite("iteration", small_bounds).suite is Suite.ITERATION


def test_elliptic_pool():
    specs = elliptic_specs(4)
    assert [str(spec.theta) for spec in specs] == ["1/2", "1/3", "2/3", "1/4", "3/4"]
    above_one = elliptic_specs(2, low=1, high=3)
    assert [str(spec.theta) for spec in above_one] == ["3/2", "5/2"]


def test_hyperbolic_pool():
    specs = hyperbolic_specs(("1/2",))
    assert [spec.orbit_class for spec in specs] == [
        OrbitClass.NEG_HYP_ONE,
        OrbitClass.NEG_HYP_TWO,
        OrbitClass.POS_HYP_ONE,
        OrbitClass.POS_HYP_TWO,
    ]


def test_building_pool_is_dynamically_convex():
    assert all(mu1(spec) >= HalfInt.of("3/2") for spec in building_pool())
    assert len(cover_pool()) == 5


def test_bounds_from_flags():
    bounds = EnumBounds.from_flags(max_mult=3, theta_den=9, cover_theta_den=None, max_k=5)
    assert bounds.max_total_multiplicity == 3
    assert bounds.theta_denominator_bound == 9
    assert bounds.max_k == 5
    assert bounds.cover_theta_denominator == EnumBounds().cover_theta_denominator


def test_buildings_suite_reaches_pair_ends(small_bounds):
    bounds = small_bounds.model_copy(update={"max_punctures": 5})
    result = run_suite(Suite.BUILDINGS, bounds)
    assert result.details["with_pair_ends"] > 0
    assert result.counterexamples == []


def test_ech_lemma_counts_every_enumerated_cover(small_bounds):
    result = run_suite(Suite.ECH_LEMMA, small_bounds)
    # degenerate elliptic iterates are skipped, not counted
    assert result.checked > 0
    assert result.skipped > 0
    assert result.details["minima_attained"] >= result.details["orbits"]

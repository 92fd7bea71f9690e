import pytest
from fastapi.testclient import TestClient
from typer.testing import CliRunner

from app.calculus.orbits import make_orbit
from app.main import app
from app.models.orbit import OrbitClass, OrbitSpec
from app.models.query_params import EnumBounds


# Let pytest-asyncio manage the event loop
# We don't define our own event_loop fixture to avoid warnings


ORBIT_SEEDS = {
    "elliptic": (OrbitClass.ELLIPTIC, "5/17"),
    "neg-hyp-1": (OrbitClass.NEG_HYP_ONE, "1/2"),
    "neg-hyp-2": (OrbitClass.NEG_HYP_TWO, "1/2"),
    "pos-hyp-1": (OrbitClass.POS_HYP_ONE, "1/2"),
    "pos-hyp-2": (OrbitClass.POS_HYP_TWO, "1/2"),
}


@pytest.fixture
def orbit(request) -> OrbitSpec:
    """Fixture to provide an orbit.

    Parametrize it indirectly with a key of ORBIT_SEEDS, or with a
    (class, seed) tuple:
    @pytest.mark.parametrize("orbit", ["neg-hyp-1", ("elliptic", "1/100")], indirect=True)
    """
    param = getattr(request, "param", "neg-hyp-1")
    if isinstance(param, str):
        param = ORBIT_SEEDS[param]
    return make_orbit(*param)


@pytest.fixture
def small_bounds() -> EnumBounds:
    """Bounds small enough for every suite to finish in a few seconds."""
    return EnumBounds(
        max_total_multiplicity=4,
        max_genus=1,
        max_parts=3,
        theta_denominator_bound=7,
        cover_theta_denominator=5,
        max_degree=3,
        max_n=6,
        max_d=6,
        max_k=12,
        samples=60,
        seed=7,
        max_levels=2,
        max_punctures=4,
    )


@pytest.fixture
def test_client() -> TestClient:
    """Create a FastAPI test client."""
    with TestClient(app) as client:
        yield client


@pytest.fixture
def cli_runner() -> CliRunner:
    return CliRunner()

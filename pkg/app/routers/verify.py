from typing import Dict, List, Optional, Tuple

from fastapi import APIRouter, Depends, HTTPException, Query
from loguru import logger

from app.commands import cmd_verify
from app.core.config import settings
from app.core.errors import IndexCalculusError
from app.models.query_params import EnumBounds, Suite
from app.models.reports import RunReport

router = APIRouter(tags=["Verify"])


def parse_bounds(
    max_mult: Optional[int] = Query(None, ge=1, description="Largest total multiplicity of a trivial-cylinder cover"),
    max_genus: Optional[int] = Query(None, ge=0, description="Largest genus of an enumerated cover"),
    max_parts: Optional[int] = Query(None, ge=1, description="Largest number of ends on one side of a cover"),
    theta_den: Optional[int] = Query(None, ge=1, description="Largest denominator of an elliptic rotation number"),
    cover_theta_den: Optional[int] = Query(None, ge=1, description="Largest elliptic denominator in the cover and breaking suites"),
    max_degree: Optional[int] = Query(None, ge=1, description="Largest covering degree"),
    max_n: Optional[int] = Query(None, ge=1, description="Largest total multiplicity in the partition suite"),
    max_d: Optional[int] = Query(None, ge=1, description="Largest d in the bad-breaking suite"),
    max_k: Optional[int] = Query(None, ge=1, description="Largest iterate in the iteration suites"),
    samples: Optional[int] = Query(None, ge=1, description="Number of sampled half-period matrices"),
    seed: Optional[int] = Query(None, description="Seed of the matrix sampler"),
    max_levels: Optional[int] = Query(None, ge=1, description="Largest number of building levels"),
    max_punctures: Optional[int] = Query(None, ge=1, description="Largest puncture count of a building"),
) -> EnumBounds:
    """Bounds given in the query, the configured defaults elsewhere."""
    return EnumBounds.from_flags(**locals())


# (bound, setting) pairs capped per suite on the HTTP surface
HTTP_LIMITS: Dict[Suite, List[Tuple[str, str]]] = {
    Suite.ECH_LEMMA: [
        ("max_total_multiplicity", "HTTP_MAX_VERIFY_MULTIPLICITY"),
        ("max_genus", "HTTP_MAX_VERIFY_GENUS"),
        ("cover_theta_denominator", "HTTP_MAX_VERIFY_COVER_THETA_DENOMINATOR"),
    ],
    Suite.PARTITION: [("max_n", "HTTP_MAX_VERIFY_N"), ("theta_denominator_bound", "HTTP_MAX_VERIFY_THETA_DENOMINATOR")],
    Suite.MULTICOVER: [("max_degree", "HTTP_MAX_VERIFY_DEGREE")],
    Suite.BUILDINGS: [("max_levels", "HTTP_MAX_VERIFY_LEVELS"), ("max_punctures", "HTTP_MAX_VERIFY_PUNCTURES")],
    Suite.BAD_BREAKING: [("max_d", "HTTP_MAX_VERIFY_D"), ("cover_theta_denominator", "HTTP_MAX_VERIFY_COVER_THETA_DENOMINATOR")],
    Suite.ITERATE_BOUNDS: [("max_k", "HTTP_MAX_VERIFY_K"), ("theta_denominator_bound", "HTTP_MAX_VERIFY_THETA_DENOMINATOR")],
    Suite.ITERATION: [("max_k", "HTTP_MAX_VERIFY_K"), ("theta_denominator_bound", "HTTP_MAX_VERIFY_THETA_DENOMINATOR")],
    Suite.CLASSIFICATION: [("samples", "HTTP_MAX_VERIFY_SAMPLES")],
}


def check_http_bounds(suite: Suite, bounds: EnumBounds) -> None:
    """Reject bounds above the configured HTTP limits for the suite."""
    for field, setting in HTTP_LIMITS[suite]:
        limit = getattr(settings, setting)
        value = getattr(bounds, field)
        if value > limit:
            raise HTTPException(
                status_code=400,
                detail=f"{field}={value} is above the HTTP limit {limit} for {suite.value}; pass a smaller bound or use the CLI",
            )


@router.get("/verify/{suite}", summary="Replay a suite over bounded instances")
def get_verify(suite: Suite, bounds: EnumBounds = Depends(parse_bounds)) -> RunReport:
    r"""
Run one verification suite and return every counterexample found.

Suites: `ech-lemma`, `partition`, `multicover`, `buildings`, `bad-breaking`,
`iterate-bounds`, `iteration` and `classification`. Unset bounds fall back to the
server configuration (`VERIFY_*` settings). Bounds above the `HTTP_MAX_VERIFY_*` limits
are refused with 400; run larger replays from the command line.

### URL examples

- /api/v1/verify/bad-breaking?max_d=20

- /api/v1/verify/partition?max_n=8&theta_den=11

- /api/v1/verify/classification?samples=200&seed=7
    """
    check_http_bounds(suite, bounds)
    try:
        return cmd_verify(suite, bounds)
    except IndexCalculusError:
        raise
    except Exception as e:
        logger.error(f"Error running suite {suite.value}: {e}")
        raise HTTPException(status_code=500, detail=f"Error running suite {suite.value}: {str(e)}")

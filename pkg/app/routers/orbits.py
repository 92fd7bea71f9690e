from typing import Optional

from fastapi import APIRouter, Depends, HTTPException, Query
from loguru import logger

from app.commands import cmd_classify, cmd_iterate, cmd_partition, orbit_from_params, parse_k_range
from app.core.config import settings
from app.core.errors import IndexCalculusError
from app.models.ech import EndSign
from app.models.orbit import OrbitClass
from app.models.query_params import ClassifyRequest, OrbitQueryParams
from app.models.reports import RunReport

router = APIRouter(tags=["Orbits"])


def parse_orbit_params(
    orbit_class: OrbitClass = Query(..., alias="class", description="Orbit class: elliptic, neg-hyp-1, neg-hyp-2, pos-hyp-1 or pos-hyp-2"),
    theta: Optional[str] = Query(None, description="Rotation number of an elliptic orbit in full turns, e.g. '5/17'"),
    mu1: Optional[str] = Query(None, description="mu1 of a hyperbolic orbit, a strict half-integer such as '1/2'"),
) -> OrbitQueryParams:
    """Parse and validate the orbit query parameters."""
    try:
        return OrbitQueryParams(orbit_class=orbit_class, theta=theta, mu1=mu1)
    except ValueError as e:
        logger.error(f"Error parsing orbit parameters: {e}")
        raise HTTPException(status_code=400, detail=f"Invalid orbit parameters: {str(e)}")


@router.post("/classify", summary="Classify a monodromy matrix")
async def post_classify(request: ClassifyRequest) -> RunReport:
    r"""
Classify a 2x2 symplectic matrix with equal diagonal entries.

The body holds the four entries row-major as exact rationals. With `"half": true`
the matrix is read as the half-period matrix H of the brake orbit and the monodromy
N H^-1 N H is classified; the half-period sign table is cross-checked on the way
and any disagreement is listed in `counterexamples`.

The response carries the class, the canonical form under diagonal conjugation and
the point of the quotient (circle for elliptic, one of the spikes for hyperbolic).

### Python example

```python
import requests

response = requests.post(
    "http://localhost:8000/api/v1/classify",
    json={"matrix": ["3", "4", "2", "3"], "half": False},
)

if response.status_code == 200:
    report = response.json()
    print(report["results"]["class"])
    # pos-hyp-2
else:
    print(f"Error: {response.status_code} - {response.text}")
```
    """
    try:
        return cmd_classify(request.matrix, half=request.half)
    except IndexCalculusError:
        raise
    except ValueError as e:
        raise HTTPException(status_code=400, detail=f"Invalid input: {str(e)}")
    except Exception as e:
        logger.error(f"Error classifying matrix: {e}")
        raise HTTPException(status_code=500, detail=f"Error classifying matrix: {str(e)}")


@router.get("/iterate", summary="Tabulate the indices of iterates")
async def get_iterate(
    params: OrbitQueryParams = Depends(parse_orbit_params),
    k: str = Query("1..10", description="Iterates: '3', '1..4' or '1,3,5'"),
) -> RunReport:
    r"""
Tabulate mu1, mu2 and mu_CZ of the iterates of a brake orbit.

Iterates with an integral rotation are reported with `degenerate: true` instead of failing.

### URL examples

- /api/v1/iterate?class=neg-hyp-1&mu1=1/2&k=1..4

- /api/v1/iterate?class=elliptic&theta=5/17&k=17

### Python example

```python
import requests

response = requests.get(
    "http://localhost:8000/api/v1/iterate",
    params={"class": "pos-hyp-1", "mu1": "1/2", "k": "1..5"},
)

if response.status_code == 200:
    for row in response.json()["results"]:
        print(row["k"], row["mu1"], row["mu2"], row["mu_cz"])
else:
    print(f"Error: {response.status_code} - {response.text}")
```
    """
    try:
        ks = parse_k_range(k)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=f"Invalid iterate range: {str(e)}")
    if max(ks) > settings.HTTP_MAX_MULTIPLICITY:
        raise HTTPException(status_code=400, detail=f"Iterates above {settings.HTTP_MAX_MULTIPLICITY} are not served")

    try:
        return cmd_iterate(orbit_from_params(params), ks)
    except IndexCalculusError:
        raise
    except ValueError as e:
        raise HTTPException(status_code=400, detail=f"Invalid input: {str(e)}")
    except Exception as e:
        logger.error(f"Error tabulating iterates: {e}")
        raise HTTPException(status_code=500, detail=f"Error tabulating iterates: {str(e)}")


@router.get("/partition", summary="Get the sharp partition of n")
async def get_partition(
    params: OrbitQueryParams = Depends(parse_orbit_params),
    n: int = Query(..., ge=1, description="Total multiplicity"),
    end: EndSign = Query(EndSign.NEG, description="Which ends: 'neg' or 'pos'"),
    audit: bool = Query(False, description="Include the left side of the inequality for every partition"),
) -> RunReport:
    r"""
Partition of the total multiplicity n into end multiplicities at which the
Fredholm index equals the Real ECH index bound.

The report also lists the equality set over all partitions of n; any disagreement
with the stated partition is returned in `counterexamples`.

### URL examples

- /api/v1/partition?class=neg-hyp-1&mu1=1/2&n=6

- /api/v1/partition?class=pos-hyp-1&mu1=1/2&n=4&end=pos

- /api/v1/partition?class=elliptic&theta=1/100&n=3&audit=true
    """
    if n > settings.HTTP_MAX_PARTITION_N:
        raise HTTPException(status_code=400, detail=f"n above {settings.HTTP_MAX_PARTITION_N} is not served")
    try:
        return cmd_partition(orbit_from_params(params), n, end=end, audit=audit)
    except IndexCalculusError:
        raise
    except ValueError as e:
        raise HTTPException(status_code=400, detail=f"Invalid input: {str(e)}")
    except Exception as e:
        logger.error(f"Error computing partition: {e}")
        raise HTTPException(status_code=500, detail=f"Error computing partition: {str(e)}")

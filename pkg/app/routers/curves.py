from typing import Any, Dict

from fastapi import APIRouter, Body, HTTPException
from loguru import logger

from app.commands import cmd_index
from app.core.errors import IndexCalculusError
from app.models.reports import RunReport

router = APIRouter(tags=["Curves"])


@router.post("/index", summary="Compute the Real Fredholm index of a curve")
async def post_index(config: Dict[str, Any] = Body(..., description="CurveConfig, or a trivial-cylinder cover with a 'base' orbit")) -> RunReport:
    r"""
Compute the Fredholm index of a Real pseudoholomorphic curve from its combinatorial data.

A `CurveConfig` lists the genus, the relative first Chern number `c1` and the
punctures: symmetric ones (`sym_pos`, `sym_neg`) and nonsymmetric pairs exchanged by
the involution (`pair_pos`, `pair_neg`). Each puncture names its orbit and multiplicity.
When no puncture is symmetric, the index of the doubled (non-Real) curve is also returned.

A body with a `base` key is read as a branched cover of the trivial cylinder over that
orbit, with multiplicity lists `a`, `b` (symmetric) and `c`, `d` (pairs); the closed-form
index is returned next to the direct one.

### Python example

```python
import requests

plane = {
    "sym_pos": [{"orbit": {"class": "neg-hyp-1", "mu1": "3/2"}, "mult": 1}],
}
response = requests.post("http://localhost:8000/api/v1/index", json=plane)

if response.status_code == 200:
    print(response.json()["results"]["ind_real"])
    # 1
else:
    print(f"Error: {response.status_code} - {response.text}")
```
    """
    try:
        return cmd_index(config)
    except IndexCalculusError:
        raise
    except ValueError as e:
        raise HTTPException(status_code=400, detail=f"Invalid input: {str(e)}")
    except Exception as e:
        logger.error(f"Error computing index: {e}")
        raise HTTPException(status_code=500, detail=f"Error computing index: {str(e)}")

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.middleware.gzip import GZipMiddleware
from fastapi.responses import JSONResponse
from loguru import logger

from app.core.config import settings
from app.core.errors import IndexCalculusError
from app.routers import curves, orbits, verify

# Initialize FastAPI application
app = FastAPI(
    title=settings.PROJECT_NAME,
    description=settings.DESCRIPTION
    + """

# User Guide

The Brake Index API exposes the same calculus as the `brake-index` command line tool:
classification of monodromies, the iteration formulae for mu1, mu2 and mu_CZ, Real Fredholm
indices of curve configurations, the partition conditions, and the verification suites that
replay each index inequality over bounded instance spaces.

All rationals and half-integers are exchanged as exact strings such as `"5/17"` or `"-3/2"`.
Every endpoint returns a run report with `command`, `inputs`, `results`, `counterexamples`
and `timing`; an empty `counterexamples` list means every check passed.

## Errors

- **400**: the request could not be parsed (malformed rational, bad iterate range, bound too large).
- **422**: a domain condition failed, e.g. a degenerate orbit, a non-symplectic matrix or an
  unbalanced cover. The body is `{"detail": {"type": ..., "message": ...}}`.
- **500**: unexpected failure.

""",
    version=settings.VERSION,
    openapi_url="/api/v1/openapi.json",
    docs_url="/api/v1/docs",
    redoc_url="/api/v1/redoc",
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
    max_age=600,
)

# Add GZip compression middleware to compress large responses
app.add_middleware(GZipMiddleware, minimum_size=1000)


@app.exception_handler(IndexCalculusError)
async def index_calculus_error_handler(request: Request, exc: IndexCalculusError) -> JSONResponse:
    logger.info(f"{request.url.path}: {type(exc).__name__}: {exc}")
    return JSONResponse(status_code=422, content={"detail": {"type": type(exc).__name__, "message": str(exc)}})


# Include API routers
app.include_router(orbits.router, prefix="/api/v1")
app.include_router(curves.router, prefix="/api/v1")
app.include_router(verify.router, prefix="/api/v1")

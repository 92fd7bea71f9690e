from typing import Any, Dict, List

from pydantic import BaseModel, Field

from app.models.query_params import Suite


class SuiteResult(BaseModel):
    """Outcome of one verification suite."""

    suite: Suite
    checked: int = Field(..., description="Number of instances checked")
    skipped: int = Field(0, description="Instances skipped as degenerate or outside a hypothesis")
    counterexamples: List[str] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict, description="Suite-specific counts and witnesses")


class Timing(BaseModel):
    seconds: float


class RunReport(BaseModel):
    """Report printed by every command; success iff ``counterexamples`` is empty."""

    command: str = Field(..., description="Command name")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Normalized inputs")
    results: Any = None
    counterexamples: List[str] = Field(default_factory=list)
    timing: Timing


class ErrorDetail(BaseModel):
    type: str
    message: str


class ErrorReport(BaseModel):
    command: str
    error: ErrorDetail

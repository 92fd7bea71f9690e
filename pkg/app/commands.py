"""Report builders shared by the command line and the HTTP routers."""

import time
from typing import Any, Dict, List, Optional, Sequence

from loguru import logger

from app.calculus.ech import negative_partition, positive_partition, verify_rech
from app.calculus.fredholm import (
    doubled,
    euler_characteristic,
    ind_nonsymmetric,
    ind_real,
    trivial_cover_config,
    trivial_cover_index,
    trivial_cover_minimum,
)
from app.calculus.orbits import classify, classify_half_period, iteration_table, reverse
from app.models.curve import CurveConfig, IndexReport, TrivialCylinderCover
from app.models.ech import EndSign
from app.models.numbers import RationalLike, format_rational, parse_rational
from app.models.orbit import OrbitSpec, Sp2Matrix
from app.models.query_params import EnumBounds, OrbitQueryParams, Suite
from app.models.reports import ErrorDetail, ErrorReport, RunReport, Timing
from app.oracle.suites import run_suite


class _Clock:
    def __init__(self):
        self.start = time.perf_counter()

    def timing(self) -> Timing:
        return Timing(seconds=round(time.perf_counter() - self.start, 6))


def parse_k_range(text: str) -> List[int]:
    """Iterates from '3', '1..4' or '1,3,5'."""
    ks: List[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            low, high = (int(x) for x in chunk.split("..", 1))
            if low > high:
                raise ValueError(f"empty range {chunk}")
            ks.extend(range(low, high + 1))
        else:
            ks.append(int(chunk))
    if not ks or min(ks) < 1:
        raise ValueError(f"iterates must be positive integers, got {text!r}")
    return ks


def orbit_from_params(params: OrbitQueryParams) -> OrbitSpec:
    return OrbitSpec(orbit_class=params.orbit_class, theta=params.theta, mu1=params.mu1)


def _dump(model: Any) -> Any:
    return model.model_dump(mode="json")


def cmd_classify(matrix: Sequence[RationalLike], half: bool = False) -> RunReport:
    clock = _Clock()
    entries = [parse_rational(x) for x in matrix]
    if len(entries) != 4:
        raise ValueError(f"a 2x2 matrix needs 4 entries, got {len(entries)}")
    parsed = Sp2Matrix.of(*entries)
    classification = classify(parsed, half=half)
    counterexamples = []
    if half:
        table_class = classify_half_period(parsed)
        if table_class != classification.orbit_class:
            logger.warning(f"half-period table gives {table_class.value}, monodromy gives {classification.orbit_class.value}")
            counterexamples.append(
                f"half-period sign table gives {table_class.value}, monodromy gives {classification.orbit_class.value}"
            )
    return RunReport(
        command="classify",
        inputs={"matrix": [format_rational(x) for x in entries], "half": half},
        results=_dump(classification),
        counterexamples=counterexamples,
        timing=clock.timing(),
    )


def cmd_iterate(spec: OrbitSpec, ks: Sequence[int]) -> RunReport:
    clock = _Clock()
    rows = iteration_table(spec, ks)
    return RunReport(
        command="iterate",
        inputs={"orbit": _dump(spec), "k": list(ks)},
        results=[_dump(row) for row in rows],
        timing=clock.timing(),
    )


def cmd_index(config: Dict[str, Any]) -> RunReport:
    """Index of a CurveConfig, or of a trivial-cylinder cover when the document has a 'base' key."""
    clock = _Clock()
    if "base" in config:
        cover = TrivialCylinderCover.model_validate(config)
        closed = trivial_cover_index(cover)
        cfg = trivial_cover_config(cover)
        report = IndexReport(
            ind_real=ind_real(cfg),
            euler_characteristic=euler_characteristic(cfg),
            closed_form=closed,
            minimum_configuration=trivial_cover_minimum(cover),
        )
        inputs = {"cover": _dump(cover)}
    else:
        cfg = CurveConfig.model_validate(config)
        ind_doubled: Optional[int] = None
        if not cfg.sym_pos and not cfg.sym_neg:
            d = doubled(cfg)
            ind_doubled = ind_nonsymmetric(d.genus, d.c1, d.pos, d.neg)
        report = IndexReport(
            ind_real=ind_real(cfg),
            euler_characteristic=euler_characteristic(cfg),
            ind_doubled=ind_doubled,
        )
        inputs = {"config": _dump(cfg)}
    counterexamples = []
    if report.closed_form is not None and report.closed_form != report.ind_real:
        counterexamples.append(f"closed form {report.closed_form} != ind_real {report.ind_real}")
    return RunReport(command="index", inputs=inputs, results=_dump(report), counterexamples=counterexamples, timing=clock.timing())


def cmd_partition(spec: OrbitSpec, n: int, end: EndSign = EndSign.NEG, audit: bool = False) -> RunReport:
    """The sharp partition of n for the chosen ends, with the inequality audit behind it."""
    clock = _Clock()
    end = EndSign(end)
    if end is EndSign.NEG:
        partition = negative_partition(spec, n)
        report = verify_rech(spec, n, audit=audit)
    else:
        partition = positive_partition(spec, n)
        report = verify_rech(reverse(spec), n, audit=audit)
    return RunReport(
        command="partition",
        inputs={"orbit": _dump(spec), "n": n, "end": end.value, "audit": audit},
        results={"partition": _dump(partition), "report": _dump(report)},
        counterexamples=report.counterexamples,
        timing=clock.timing(),
    )


def cmd_verify(suite: Suite, bounds: Optional[EnumBounds] = None) -> RunReport:
    clock = _Clock()
    bounds = bounds or EnumBounds()
    result = run_suite(suite, bounds)
    return RunReport(
        command="verify",
        inputs={"suite": result.suite.value, "bounds": _dump(bounds)},
        results=_dump(result),
        counterexamples=result.counterexamples,
        timing=clock.timing(),
    )


def error_report(command: str, error: Exception) -> ErrorReport:
    logger.debug(f"{command} failed with {type(error).__name__}: {error}")
    return ErrorReport(command=command, error=ErrorDetail(type=type(error).__name__, message=str(error)))

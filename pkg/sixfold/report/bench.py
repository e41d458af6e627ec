"""Wall-clock timing of the sieve engine against the oracle"""

import logging
from time import perf_counter
from typing import Callable, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, Field

from sixfold.core.errors import DomainError
from sixfold.core.utils import _check_index
from sixfold.oracle.table import oracle_counts
from sixfold.sieve.engine import composite_count_minus, composite_count_plus

from sixfold.core.logging import handler  # isort:skip

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False

BENCH_COLUMNS = [
    "path",
    "m",
    "repetitions",
    "pi_total",
    "terms",
    "best_seconds",
    "mean_seconds",
]


class BenchRow(BaseModel):
    """Timings of one counting path."""

    path: str = Field(..., description="`engine` or `oracle`.")
    m: int = Field(..., ge=1, description="Index counted.")
    repetitions: int = Field(..., ge=1, description="Number of timed runs.")
    pi_total: int = Field(..., ge=0, description="Prime count of the path.")
    terms: Optional[int] = Field(
        None, description="Terms enumerated per run (engine only)."
    )
    best_seconds: float = Field(..., ge=0, description="Fastest run.")
    mean_seconds: float = Field(..., ge=0, description="Mean run time.")


class BenchReport(BaseModel):
    """Timings of both paths at one m."""

    m: int = Field(..., ge=1, description="Index counted.")
    repetitions: int = Field(..., ge=1, description="Number of timed runs per path.")
    rows: List[BenchRow] = Field(default_factory=list, description="One row per path.")

    def to_frame(self) -> pd.DataFrame:
        """One row per path."""
        frame = pd.DataFrame([row.model_dump() for row in self.rows], columns=BENCH_COLUMNS)
        frame["terms"] = frame["terms"].astype("Int64")
        return frame

    def __str__(self) -> str:
        return self.to_frame().to_string(index=False)


def _engine_run(m: int) -> Tuple[int, int]:
    plus = composite_count_plus(m)
    minus = composite_count_minus(m)
    return 2 * m - (plus.total + minus.total), plus.terms + minus.terms


def _oracle_run(m: int) -> Tuple[int, None]:
    return oracle_counts(m).pi_total, None


def _time(
    path: str, run: Callable[[int], Tuple[int, Optional[int]]], m: int, repetitions: int
) -> BenchRow:
    timings = []
    outcomes = set()
    for _ in range(repetitions):
        start = perf_counter()
        outcomes.add(run(m))
        timings.append(perf_counter() - start)
    if len(outcomes) != 1:
        raise ArithmeticError(f"The {path} path is not deterministic at m={m}: {outcomes}.")
    pi_total, terms = outcomes.pop()
    logger.debug("Bench %s at m=%s: best %.6f s", path, m, min(timings))
    return BenchRow(
        path=path,
        m=m,
        repetitions=repetitions,
        pi_total=pi_total,
        terms=terms,
        best_seconds=min(timings),
        mean_seconds=sum(timings) / repetitions,
    )


def run_bench(m: int, repetitions: int = 1) -> BenchReport:
    """Time both paths `repetitions` times at m; counts must agree across runs."""
    _check_index(m)
    if repetitions < 1:
        raise DomainError(f"`repetitions` must be at least 1, not {repetitions}.")
    return BenchReport(
        m=m,
        repetitions=repetitions,
        rows=[
            _time("engine", _engine_run, m, repetitions),
            _time("oracle", _oracle_run, m, repetitions),
        ],
    )

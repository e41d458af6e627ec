"""Sweep of the sieve engine against the brute-force oracle"""

import logging
from typing import List, Optional

import pandas as pd
from pydantic import BaseModel, Field, model_validator

from sixfold.core.utils import _check_index
from sixfold.oracle.table import OracleCounts, oracle_counts, sieve_upto
from sixfold.report.render import integer_frame
from sixfold.sieve.engine import CountSummary, count_summary

from sixfold.core.logging import handler  # isort:skip

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False

COUNT_FIELDS = ("p_plus", "pi_plus", "p_minus", "pi_minus", "pi_total")


class VerifyRecord(BaseModel):
    """Engine and oracle counts for one m."""

    m: int = Field(..., ge=1, description="Index compared.")
    engine: CountSummary = Field(..., description="Counts of the sieve engine.")
    oracle: OracleCounts = Field(..., description="Counts of the oracle.")
    match: bool = Field(..., description="All five counts agree.")
    first_divergent_field: Optional[str] = Field(
        None, description="First count that differs."
    )

    @model_validator(mode="after")
    def validate_match(self) -> "VerifyRecord":
        """`match` and `first_divergent_field` must describe the counts."""
        divergent = _first_divergence(self.engine, self.oracle)
        if self.match != (divergent is None):
            raise ValueError(f"Record for m={self.m} claims match={self.match}.")
        if self.first_divergent_field != divergent:
            raise ValueError(
                f"Record for m={self.m} names {self.first_divergent_field}, not {divergent}."
            )
        return self

    def __str__(self) -> str:
        status = "match" if self.match else f"MISMATCH in {self.first_divergent_field}"
        engine = ", ".join(str(getattr(self.engine, name)) for name in COUNT_FIELDS)
        oracle = ", ".join(str(getattr(self.oracle, name)) for name in COUNT_FIELDS)
        return f"m = {self.m}: engine ({engine}), oracle ({oracle}): {status}"


class VerifyReport(BaseModel):
    """Outcome of a sweep over 1..m_max."""

    m_max: int = Field(..., ge=1, description="Largest index requested.")
    checked: int = Field(..., ge=0, description="Number of indices compared.")
    matched: int = Field(..., ge=0, description="Number of matching indices.")
    records: List[VerifyRecord] = Field(
        default_factory=list, description="One record per compared index."
    )

    @property
    def ok(self) -> bool:
        """True when every compared index matched."""
        return self.matched == self.checked == self.m_max

    @property
    def mismatches(self) -> List[VerifyRecord]:
        """Records whose counts differ."""
        return [record for record in self.records if not record.match]

    def record(self, m: int) -> VerifyRecord:
        """Record of index m."""
        return self.records[m - 1]

    def to_frame(self) -> pd.DataFrame:
        """One row per record with both sets of counts."""
        records = []
        for record in self.records:
            row = {"m": record.m, "match": record.match}
            for name in COUNT_FIELDS:
                row[f"engine_{name}"] = getattr(record.engine, name)
                row[f"oracle_{name}"] = getattr(record.oracle, name)
            row["first_divergent_field"] = record.first_divergent_field
            records.append(row)
        columns = (
            ["m", "match"]
            + [f"engine_{name}" for name in COUNT_FIELDS]
            + [f"oracle_{name}" for name in COUNT_FIELDS]
            + ["first_divergent_field"]
        )
        return integer_frame(records, columns)

    def __str__(self) -> str:
        lines = [str(record) for record in self.mismatches]
        if self.records and self.records[-1].match:
            lines.append(str(self.records[-1]))
        lines.append(f"{self.matched}/{self.m_max} match")
        return "\n".join(lines)


def _first_divergence(engine: CountSummary, oracle: OracleCounts) -> Optional[str]:
    for name in COUNT_FIELDS:
        if getattr(engine, name) != getattr(oracle, name):
            return name
    return None


def compare(m: int, engine: CountSummary, oracle: OracleCounts) -> VerifyRecord:
    """Build the record of one index."""
    divergent = _first_divergence(engine, oracle)
    return VerifyRecord(
        m=m,
        engine=engine,
        oracle=oracle,
        match=divergent is None,
        first_divergent_field=divergent,
    )


def run_verification(m_max: int, fail_fast: bool = False) -> VerifyReport:
    """
    Compare engine and oracle for every m <= m_max against one shared
    sieve table. With `fail_fast` the sweep stops at the first mismatch.
    """
    _check_index(m_max)
    table = sieve_upto(6 * m_max + 1)
    records = []
    matched = 0
    for m in range(1, m_max + 1):
        record = compare(m, count_summary(m), oracle_counts(m, table))
        records.append(record)
        if record.match:
            matched += 1
        else:
            logger.debug("Mismatch at m=%s: %s", m, record.first_divergent_field)
            if fail_fast:
                break
    logger.debug("Verified %s/%s indices up to %s.", matched, len(records), m_max)
    return VerifyReport(
        m_max=m_max, checked=len(records), matched=matched, records=records
    )

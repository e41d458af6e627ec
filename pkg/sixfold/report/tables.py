"""Term tables of one progression with their class counts"""

import logging
from typing import List, Optional

import pandas as pd
from pydantic import BaseModel, Field

from sixfold.core.errors import DomainError
from sixfold.core.utils import _check_index
from sixfold.forms.residue import ResidueSide
from sixfold.report.render import integer_frame, print_model
from sixfold.sieve.basis import (
    LevelTally,
    SieveTerm,
    build_basis,
    enumerate_terms,
    tally_levels,
)
from sixfold.sieve.engine import class_count

from sixfold.core.logging import handler  # isort:skip

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False

TERM_COLUMNS = ["factors", "d", "q", "s", "residue", "sign", "count"]
TALLY_COLUMNS = [
    "gamma_minus",
    "gamma_plus",
    "gamma_minus_formula",
    "gamma_plus_formula",
]


class TermRow(BaseModel):
    """One enumerated product with its signed class count."""

    factors: List[int] = Field(..., description="Basis primes of the product.")
    d: int = Field(..., description="The product.")
    q: int = Field(..., description="Level.")
    s: int = Field(..., description="Number of factors 6i-1.")
    residue: int = Field(..., description="d mod 6 as +1 or -1.")
    sign: int = Field(..., description="Inclusion-exclusion sign.")
    count: int = Field(..., ge=0, description="Class count of d.")


class TermTable(BaseModel):
    """Terms of one side up to an optional level, with level tallies."""

    m: int = Field(..., ge=1, description="Index of the counting limit.")
    side: ResidueSide = Field(..., description="Progression sieved.")
    limit: int = Field(..., description="Counting limit.")
    max_q: Optional[int] = Field(None, description="Highest level shown.")
    basis: List[int] = Field(default_factory=list, description="Basis primes.")
    rows: List[TermRow] = Field(default_factory=list, description="Term rows.")
    tallies: List[LevelTally] = Field(
        default_factory=list, description="Level sizes next to their binomial counts."
    )

    @property
    def is_empty(self) -> bool:
        """True when the basis holds no prime."""
        return not self.basis

    def to_frame(self) -> pd.DataFrame:
        """Term rows followed by one tally row per level."""
        records = [
            {**row.model_dump(), "factors": ";".join(map(str, row.factors))}
            for row in self.rows
        ]
        records += [tally.model_dump() for tally in self.tallies]
        return integer_frame(records, TERM_COLUMNS + TALLY_COLUMNS)

    def __str__(self) -> str:
        head = f"m = {self.m}, side = {self.side.value}, limit = {self.limit}"
        if self.is_empty:
            return f"{head}\nempty basis"
        terms = integer_frame(
            [
                {**row.model_dump(), "factors": "·".join(map(str, row.factors))}
                for row in self.rows
            ],
            TERM_COLUMNS,
        )
        tallies = integer_frame(
            [tally.model_dump() for tally in self.tallies], ["q"] + TALLY_COLUMNS
        )
        return (
            f"{head}\n{terms.to_string(index=False)}\n\n"
            f"{tallies.to_string(index=False)}"
        )

    def __repr__(self) -> str:
        return print_model(self, "terms")


def _display_key(term: SieveTerm) -> tuple:
    # residue -1 before +1, more 6i-1 factors first, then by size
    return (term.q, 0 if term.d_residue == -1 else 1, -term.s, term.d)


def term_table(m: int, side: ResidueSide, max_q: Optional[int] = None) -> TermTable:
    """
    Enumerate the terms of `side` at m, optionally cut after level `max_q`,
    and count each of them.

    Example:
        >>> [row.count for row in term_table(50, ResidueSide.MINUS_ONE, 1).rows]
        [9, 4, 7, 4]
    """
    _check_index(m)
    if max_q is not None and max_q < 1:
        raise DomainError(f"`max_q` must be at least 1, not {max_q}.")
    basis = build_basis(m, side)
    terms = [
        term
        for term in enumerate_terms(basis)
        if max_q is None or term.q <= max_q
    ]
    rows = [
        TermRow(
            factors=list(term.factors),
            d=term.d,
            q=term.q,
            s=term.s,
            residue=term.d_residue,
            sign=term.sign,
            count=class_count(term.d, term.q, side, m),
        )
        for term in sorted(terms, key=_display_key)
    ]
    logger.debug("Term table for m=%s on the %s side: %s rows.", m, side.value, len(rows))
    return TermTable(
        m=m,
        side=side,
        limit=basis.limit,
        max_q=max_q,
        basis=basis.primes,
        rows=rows,
        tallies=tally_levels(basis, terms),
    )

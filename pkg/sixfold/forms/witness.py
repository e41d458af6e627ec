"""Constructive membership in the index sets M1, M2 and their complements H1, H2"""

import logging
from typing import List, Optional

from pydantic import BaseModel, Field, computed_field

from sixfold.core.utils import _check_index
from sixfold.forms.residue import FactorWitness, ResidueSide

from sixfold.core.logging import handler  # isort:skip

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False


def _plus_witnesses(m: int) -> List[FactorWitness]:
    """All witnesses of m = 6ij -+ (i+j) with 1 <= j <= i."""
    found = []
    j = 1
    while 6 * j * j - 2 * j <= m:
        # m + j = i(6j-1) for (6i-1)(6j-1), m - j = i(6j+1) for (6i+1)(6j+1)
        for sign in (-1, 1):
            numerator = m - sign * j
            divisor = 6 * j + sign
            if numerator % divisor == 0 and numerator // divisor >= j:
                found.append(
                    FactorWitness(
                        i=numerator // divisor, j=j, i_sign=sign, j_sign=sign
                    )
                )
        j += 1
    return sorted(found, key=lambda w: (w.j, w.i, w.i_sign))


def _minus_witnesses(m: int) -> List[FactorWitness]:
    """All witnesses of m = 6ij + i - j, i indexing the factor 6i-1."""
    found = set()
    small = 1
    while 6 * small * small <= m:
        # the smaller index is the 6i-1 factor: m - i = j(6i-1)
        if (m - small) % (6 * small - 1) == 0:
            j = (m - small) // (6 * small - 1)
            if j >= small:
                found.add(FactorWitness(i=small, j=j, i_sign=-1, j_sign=1))
        # the smaller index is the 6j+1 factor: m + j = i(6j+1)
        if (m + small) % (6 * small + 1) == 0:
            i = (m + small) // (6 * small + 1)
            if i >= small:
                found.add(FactorWitness(i=i, j=small, i_sign=-1, j_sign=1))
        small += 1
    return sorted(found, key=lambda w: (w.j, w.i))


def witness_set(m: int, side: ResidueSide) -> List[FactorWitness]:
    """
    Every factorization of 6m+1 (plus side) or 6m-1 (minus side) into two
    factors of the forms 6i+-1 and 6j+-1, ordered by j, then i, then sign.

    Plus-side witnesses are normalized to j <= i. Minus-side witnesses always
    carry the 6i-1 factor first, so i and j are not ordered.
    """
    _check_index(m)
    if side is ResidueSide.PLUS_ONE:
        witnesses = _plus_witnesses(m)
    else:
        witnesses = _minus_witnesses(m)
    logger.debug(
        "Found %s witnesses for m=%s on the %s side.",
        len(witnesses),
        m,
        side.value,
    )
    return witnesses


def m1_witness(m: int) -> Optional[FactorWitness]:
    """First witness that 6m+1 is composite, None when 6m+1 is prime."""
    witnesses = witness_set(m, ResidueSide.PLUS_ONE)
    return witnesses[0] if witnesses else None


def m2_witness(m: int) -> Optional[FactorWitness]:
    """First witness (6i-1)(6j+1) = 6m-1, None when 6m-1 is prime."""
    witnesses = witness_set(m, ResidueSide.MINUS_ONE)
    return witnesses[0] if witnesses else None


def in_m1(m: int) -> bool:
    """m belongs to M1, i.e. 6m+1 is composite."""
    return m1_witness(m) is not None


def in_m2(m: int) -> bool:
    """m belongs to M2, i.e. 6m-1 is composite."""
    return m2_witness(m) is not None


def in_h1(m: int) -> bool:
    """m belongs to H1 = N \\ M1, i.e. 6m+1 is prime."""
    return not in_m1(m)


def in_h2(m: int) -> bool:
    """m belongs to H2 = N \\ M2, i.e. 6m-1 is prime."""
    return not in_m2(m)


class WitnessSummary(BaseModel):
    """Witness sets of 6m+1 and 6m-1 with the resulting set memberships."""

    m: int = Field(..., ge=1, description="Index examined.")
    plus: List[FactorWitness] = Field(
        default_factory=list, description="Factorizations of 6m+1."
    )
    minus: List[FactorWitness] = Field(
        default_factory=list, description="Factorizations of 6m-1."
    )

    @computed_field
    @property
    def in_m1(self) -> bool:
        """6m+1 is composite."""
        return bool(self.plus)

    @computed_field
    @property
    def in_m2(self) -> bool:
        """6m-1 is composite."""
        return bool(self.minus)

    def __str__(self) -> str:
        lines = [f"m = {self.m}"]
        for side, witnesses, composite, sets in (
            (ResidueSide.PLUS_ONE, self.plus, self.in_m1, ("M1", "H1")),
            (ResidueSide.MINUS_ONE, self.minus, self.in_m2, ("M2", "H2")),
        ):
            value = side.limit(self.m)
            found = ", ".join(str(witness) for witness in witnesses) or "none"
            member = sets[0] if composite else sets[1]
            lines.append(f"6m{side.symbol}1 = {value}: m in {member}, witnesses: {found}")
        return "\n".join(lines)


def witness_summary(m: int) -> WitnessSummary:
    """Both witness sets of m."""
    return WitnessSummary(
        m=m,
        plus=witness_set(m, ResidueSide.PLUS_ONE),
        minus=witness_set(m, ResidueSide.MINUS_ONE),
    )

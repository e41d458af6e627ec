"""Residue forms 6m+alpha of the naturals from 5 on"""

import logging
from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sixfold.core.errors import ContractViolation, DomainError
from sixfold.core.utils import _check_range

from sixfold.core.logging import handler  # isort:skip

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False

OFFSETS = (-1, 0, 1, 2, 3, 4)


class ResidueSide(Enum):
    """Arithmetic progression under study: 6t+1 or 6t-1."""

    PLUS_ONE = "plus"
    MINUS_ONE = "minus"

    @property
    def sign(self) -> int:
        """+1 for the progression 6t+1, -1 for 6t-1."""
        return 1 if self is ResidueSide.PLUS_ONE else -1

    @property
    def target(self) -> int:
        """Residue of the progression modulo 6."""
        return self.sign % 6

    @property
    def symbol(self) -> str:
        """Short symbol used in reports."""
        return "+" if self is ResidueSide.PLUS_ONE else "-"

    def limit(self, m: int) -> int:
        """Largest member 6m+1 or 6m-1 of the progression up to index m."""
        return 6 * m + self.sign


class Decomposition(BaseModel):
    """Unique representation n = 6m + alpha with alpha in {-1,...,4}."""

    m: int = Field(..., description="Index of the block of six.")
    alpha: int = Field(..., description="Offset in {-1, 0, 1, 2, 3, 4}.")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_offset(self) -> "Decomposition":
        """Check index and offset ranges."""
        if self.m < 1:
            raise ValueError(f"Index must be at least 1, not {self.m}.")
        if self.alpha not in OFFSETS:
            raise ValueError(f"Offset must be one of {OFFSETS}, not {self.alpha}.")
        return self

    @property
    def value(self) -> int:
        """Reconstructed natural number."""
        return 6 * self.m + self.alpha


class FactorWitness(BaseModel):
    """Indices and signs of a factorization (6i+i_sign)(6j+j_sign)."""

    i: int = Field(..., ge=1, description="Index of the first factor.")
    j: int = Field(..., ge=1, description="Index of the second factor.")
    i_sign: Literal[1, -1] = Field(..., description="Sign in 6i+-1.")
    j_sign: Literal[1, -1] = Field(..., description="Sign in 6j+-1.")

    model_config = ConfigDict(frozen=True)

    @property
    def factors(self) -> "tuple":
        """The two factors (6i+i_sign, 6j+j_sign)."""
        return (6 * self.i + self.i_sign, 6 * self.j + self.j_sign)

    @property
    def side(self) -> ResidueSide:
        """Progression the product lies on."""
        if self.i_sign == self.j_sign:
            return ResidueSide.PLUS_ONE
        return ResidueSide.MINUS_ONE

    def __str__(self) -> str:
        first, second = self.factors
        return f"({first})({second})"


def _check_natural(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"Expected an integer, not {type(n)}.")
    if n < 5:
        raise DomainError(f"The residue forms cover n >= 5 only, not {n}.")
    return n


def decompose(n: int) -> Decomposition:
    """
    Split a natural number n >= 5 into its block index and offset.

    Example:
        >>> decompose(301)
        Decomposition(m=50, alpha=1)
    """
    _check_natural(n)
    m = (n + 1) // 6
    return Decomposition(m=m, alpha=n - 6 * m)


def candidate_form(n: int) -> Optional[ResidueSide]:
    """Progression n belongs to, or None when n is divisible by 2 or 3."""
    _check_natural(n)
    residue = n % 6
    if residue == 1:
        return ResidueSide.PLUS_ONE
    if residue == 5:
        return ResidueSide.MINUS_ONE
    return None


def compose_factors(witness: FactorWitness, side: ResidueSide) -> int:
    """Multiply out a witness after checking its signs against `side`."""
    if witness.side is not side:
        raise ContractViolation(
            f"Witness {witness} with signs ({witness.i_sign}, {witness.j_sign}) "
            f"does not lie on the {side.value} side."
        )
    first, second = witness.factors
    logger.debug("Composing %s on the %s side.", witness, side.value)
    return _check_range(first * second, "factor product")

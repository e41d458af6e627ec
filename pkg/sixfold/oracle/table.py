"""Plain sieve of Eratosthenes and brute-force referee counts"""

import logging
from math import gcd, isqrt
from typing import TYPE_CHECKING, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from sixfold.core.errors import ContractViolation, DomainError, OracleCapExceeded
from sixfold.core.utils import _check_index, get_config
from sixfold.forms.residue import ResidueSide

from sixfold.core.logging import handler  # isort:skip

if TYPE_CHECKING:
    from typing import Dict

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False


class PrimalityTable(BaseModel):
    """
    Primality flags of 0..limit.

    Attributes:
        limit (int): Largest number covered by the table.
        flags (np.ndarray): Boolean array of length limit+1, True at primes.
    """

    limit: int = Field(..., ge=1, description="Largest number covered.")
    flags: np.ndarray = Field(..., description="flags[i] is True iff i is prime.")

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def validate_flags(self) -> "PrimalityTable":
        """Check the shape and the fixed small entries."""
        if self.flags.dtype != bool or self.flags.shape != (self.limit + 1,):
            raise ValueError(
                f"Flags must be a boolean array of length {self.limit + 1}."
            )
        if self.flags[0] or self.flags[1]:
            raise ValueError("0 and 1 are not prime.")
        if self.limit >= 3 and not (self.flags[2] and self.flags[3]):
            raise ValueError("2 and 3 are prime.")
        return self

    def is_prime(self, n: int) -> bool:
        """Look n up in the table."""
        if n < 0 or n > self.limit:
            raise DomainError(f"{n} lies outside the table range 0..{self.limit}.")
        return bool(self.flags[n])

    def prime_count(self, upto: Optional[int] = None) -> int:
        """Number of primes <= `upto` (the whole table by default)."""
        upto = self.limit if upto is None else upto
        if upto > self.limit:
            raise DomainError(f"{upto} lies beyond the table limit {self.limit}.")
        return int(np.count_nonzero(self.flags[: upto + 1]))

    def primes(self) -> np.ndarray:
        """All primes of the table, increasing."""
        return np.nonzero(self.flags)[0]


class OracleCounts(BaseModel):
    """
    Prime and composite counts of 6t+1 and 6t-1, t <= m, read off a sieve.

    The fields share their names with the engine's summary so that both can
    be compared count by count, but no engine code is involved.
    """

    m: int = Field(..., ge=1, description="Index of the counting limit.")
    p_plus: int = Field(..., ge=0, description="Composites 6t+1, t <= m.")
    pi_plus: int = Field(..., ge=0, description="Primes 6t+1, t <= m.")
    p_minus: int = Field(..., ge=0, description="Composites 6t-1, t <= m.")
    pi_minus: int = Field(..., ge=0, description="Primes 6t-1, t <= m.")
    pi_total: int = Field(..., ge=0, description="Primes up to 6m+1 except 2 and 3.")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_lookup(self) -> "OracleCounts":
        """Each progression has exactly m members."""
        if self.p_plus + self.pi_plus != self.m or self.p_minus + self.pi_minus != self.m:
            raise ValueError(f"Counts of m={self.m} do not cover both progressions.")
        return self

    @property
    def counts(self) -> "Dict[str, int]":
        """The five counts by field name."""
        return {
            name: getattr(self, name)
            for name in ("p_plus", "pi_plus", "p_minus", "pi_minus", "pi_total")
        }


def sieve_upto(limit: int) -> PrimalityTable:
    """
    Sieve 0..limit. Limits above the configured `oracle_cap` are refused.

    Example:
        >>> sieve_upto(30).prime_count()
        10
    """
    if isinstance(limit, bool) or not isinstance(limit, int) or limit < 1:
        raise DomainError(f"Sieve limit must be a positive integer, not {limit}.")
    cap = get_config().oracle_cap
    if limit > cap:
        raise OracleCapExceeded(
            f"Sieve limit {limit} exceeds the configured oracle_cap {cap}."
        )
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    logger.debug("Sieved up to %s.", limit)
    return PrimalityTable(limit=limit, flags=flags)


def oracle_counts(m: int, table: Optional[PrimalityTable] = None) -> "OracleCounts":
    """
    Count primes and composites 6t+-1, t <= m, by looking every one of them
    up in a sieve table. A `table` reaching 6m+1 may be passed in to share
    one sieve across many m.
    """
    _check_index(m)
    top = 6 * m + 1
    if table is None:
        table = sieve_upto(top)
    elif table.limit < top:
        raise DomainError(f"Table limit {table.limit} does not reach {top}.")
    pi_plus = int(np.count_nonzero(table.flags[7 : top + 1 : 6]))
    pi_minus = int(np.count_nonzero(table.flags[5:top:6]))
    return OracleCounts(
        m=m,
        p_plus=m - pi_plus,
        pi_plus=pi_plus,
        p_minus=m - pi_minus,
        pi_minus=pi_minus,
        pi_total=table.prime_count(top) - 2,
    )


def oracle_class_count(d: int, q: int, side: ResidueSide, m: int) -> int:
    """
    Walk the multiples of d up to the limit and keep those on `side`,
    leaving out d itself at level one. Divisors beyond the limit give 0.
    """
    _check_index(m)
    if d < 5 or gcd(d, 6) != 1:
        raise ContractViolation(f"Divisor {d} is not a product of primes >= 5.")
    if q < 1:
        raise DomainError(f"Level `q` must be at least 1, not {q}.")
    if side is ResidueSide.PLUS_ONE:
        limit, residue = 6 * m + 1, 1
    else:
        limit, residue = 6 * m - 1, 5
    count = 0
    for n in range(d, limit + 1, d):
        if n % 6 != residue:
            continue
        if q == 1 and n == d:
            continue
        count += 1
    return count

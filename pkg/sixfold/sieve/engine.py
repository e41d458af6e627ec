"""Signed inclusion-exclusion counts of composites and primes in 6t+1 and 6t-1"""

import logging
from math import gcd
from typing import TYPE_CHECKING, List, Optional

from pydantic import BaseModel, Field, model_validator

from sixfold.core.errors import ContractViolation, DomainError
from sixfold.core.utils import _check_index
from sixfold.forms.residue import ResidueSide
from sixfold.sieve.basis import _is_prime, build_basis, index_bounds, iter_products

from sixfold.core.logging import handler  # isort:skip

if TYPE_CHECKING:
    from typing import Dict

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False


class LevelSubtotal(BaseModel):
    """Unsigned sum of the class counts of all level-q terms on one side."""

    side: ResidueSide = Field(..., description="Progression of the terms.")
    q: int = Field(..., ge=1, description="Level.")
    terms: int = Field(..., ge=0, description="Number of enumerated terms.")
    subtotal: int = Field(..., ge=0, description="Sum of their class counts.")

    @property
    def signed(self) -> int:
        """Contribution (-1)^(q-1) * subtotal to the composite count."""
        return self.subtotal if self.q % 2 else -self.subtotal


class CompositeCount(BaseModel):
    """Number of composites 6t+-1 with 1 <= t <= m, with per-level subtotals."""

    m: int = Field(..., ge=1, description="Index of the counting limit.")
    side: ResidueSide = Field(..., description="Progression counted.")
    total: int = Field(..., ge=0, description="Composite count.")
    nu0: int = Field(0, ge=0, description="Basis primes 6i-1 of the side.")
    k0: int = Field(0, ge=0, description="Basis primes 6j+1 of the side.")
    terms: int = Field(..., ge=0, description="Number of enumerated terms.")
    levels: List[LevelSubtotal] = Field(
        default_factory=list, description="Subtotals by level."
    )

    def __int__(self) -> int:
        return self.total


class CountSummary(BaseModel):
    """
    Composite and prime counts on both progressions up to index m.

    Attributes:
        m (int): Index of the counting limit.
        nu, k, r, nu0, k0 (Optional[int]): Index bounds and plus-side prime
            counts; left empty by the oracle.
        p_plus (int): Composites 6t+1, t <= m.
        pi_plus (int): Primes 6t+1, t <= m.
        p_minus (int): Composites 6t-1, t <= m.
        pi_minus (int): Primes 6t-1, t <= m.
        pi_total (int): Primes up to 6m+1 except 2 and 3.
        levels (List[LevelSubtotal]): Per-level subtotals of both sides.
    """

    m: int = Field(..., ge=1, description="Index of the counting limit.")
    nu: Optional[int] = Field(None, description="Index bound nu.")
    k: Optional[int] = Field(None, description="Index bound k.")
    r: Optional[int] = Field(None, description="Index bound r.")
    nu0: Optional[int] = Field(None, description="Plus-side primes 6i-1.")
    k0: Optional[int] = Field(None, description="Plus-side primes 6j+1.")
    p_plus: int = Field(..., ge=0, description="Composites 6t+1, t <= m.")
    pi_plus: int = Field(..., ge=0, description="Primes 6t+1, t <= m.")
    p_minus: int = Field(..., ge=0, description="Composites 6t-1, t <= m.")
    pi_minus: int = Field(..., ge=0, description="Primes 6t-1, t <= m.")
    pi_total: int = Field(..., ge=0, description="Primes up to 6m+1 except 2 and 3.")
    levels: List[LevelSubtotal] = Field(
        default_factory=list, description="Subtotals by side and level."
    )

    @model_validator(mode="after")
    def validate_complements(self) -> "CountSummary":
        """Composites and primes of each progression add up to m."""
        if self.p_plus + self.pi_plus != self.m:
            raise ValueError(f"P+ + pi+ = {self.p_plus + self.pi_plus} != m = {self.m}")
        if self.p_minus + self.pi_minus != self.m:
            raise ValueError(f"P- + pi- = {self.p_minus + self.pi_minus} != m = {self.m}")
        if self.pi_total != self.pi_plus + self.pi_minus:
            raise ValueError(f"pi = {self.pi_total} != pi+ + pi-")
        return self

    @property
    def level_tallies_plus(self) -> List[LevelSubtotal]:
        """Subtotals of the 6t+1 side."""
        return [level for level in self.levels if level.side is ResidueSide.PLUS_ONE]

    @property
    def level_tallies_minus(self) -> List[LevelSubtotal]:
        """Subtotals of the 6t-1 side."""
        return [level for level in self.levels if level.side is ResidueSide.MINUS_ONE]

    @property
    def counts(self) -> "Dict[str, int]":
        """The five counts by field name."""
        return {
            name: getattr(self, name)
            for name in ("p_plus", "pi_plus", "p_minus", "pi_minus", "pi_total")
        }

    def __str__(self) -> str:
        head = f"m = {self.m}"
        if self.nu is not None:
            head += (
                f", nu = {self.nu}, k = {self.k}, r = {self.r}"
                f", nu0 = {self.nu0}, k0 = {self.k0}"
            )
        return (
            f"{head}\n"
            f"P+ = {self.p_plus}, pi+ = {self.pi_plus}, "
            f"P- = {self.p_minus}, pi- = {self.pi_minus}, pi = {self.pi_total}"
        )


def _multiples_in_class(d: int, q: int, side: ResidueSide, limit: int) -> int:
    """
    Multiples n = d*u <= limit with n = target (mod 6). Since d^2 = 1 (mod 6)
    the multiplier runs through u = target*d (mod 6). At level one a prime d
    lying on its own progression is itself excluded.
    """
    residue = d % 6
    start = (side.target * residue) % 6
    count = (limit // d - start) // 6 + 1
    if q == 1 and residue == side.target:
        count -= 1
    return count


def class_count(d: int, q: int, side: ResidueSide, m: int) -> int:
    """
    Number of composites on `side` up to index m that are divisible by the
    level-q product d. The level must fit d: a single prime at q = 1, a
    product of several primes at q >= 2.

    Example:
        >>> class_count(5, 1, ResidueSide.PLUS_ONE, 50)
        10
    """
    _check_index(m)
    if q < 1:
        raise DomainError(f"Level `q` must be at least 1, not {q}.")
    limit = side.limit(m)
    if d < 5 or gcd(d, 6) != 1:
        raise ContractViolation(f"Divisor {d} is not a product of primes >= 5.")
    if d > limit:
        raise ContractViolation(
            f"Divisor {d} exceeds the limit {limit}; such terms are pruned."
        )
    # the level-1 self-exclusion depends on it
    if _is_prime(d) != (q == 1):
        raise ContractViolation(
            f"Level {q} does not fit divisor {d}, which is "
            f"{'prime' if q > 1 else 'composite'}."
        )
    return _multiples_in_class(d, q, side, limit)


def _composite_count(m: int, side: ResidueSide) -> CompositeCount:
    basis = build_basis(m, side)
    limit = basis.limit
    subtotals: "Dict[int, List[int]]" = {}
    total = 0
    for factors, d, _ in iter_products(basis.primes, limit):
        q = len(factors)
        count = _multiples_in_class(d, q, side, limit)
        level = subtotals.setdefault(q, [0, 0])
        level[0] += 1
        level[1] += count
        total += count if q % 2 else -count
    if total < 0:
        raise ArithmeticError(f"Negative composite count {total} for m={m}.")
    levels = [
        LevelSubtotal(side=side, q=q, terms=terms, subtotal=subtotal)
        for q, (terms, subtotal) in sorted(subtotals.items())
    ]
    logger.debug(
        "Composite count for m=%s on the %s side: %s over levels %s",
        m,
        side.value,
        total,
        [(level.q, level.subtotal) for level in levels],
    )
    return CompositeCount(
        m=m,
        side=side,
        total=total,
        nu0=basis.nu0,
        k0=basis.k0,
        terms=sum(level.terms for level in levels),
        levels=levels,
    )


def composite_count_plus(m: int) -> CompositeCount:
    """P+(6m+1): composites 6t+1 with 1 <= t <= m."""
    return _composite_count(m, ResidueSide.PLUS_ONE)


def composite_count_minus(m: int) -> CompositeCount:
    """P-(6m-1): composites 6t-1 with 1 <= t <= m."""
    return _composite_count(m, ResidueSide.MINUS_ONE)


def prime_count_plus(m: int) -> int:
    """pi+(6m+1) = m - P+(6m+1)."""
    return m - composite_count_plus(m).total


def prime_count_minus(m: int) -> int:
    """pi-(6m-1) = m - P-(6m-1)."""
    return m - composite_count_minus(m).total


def prime_count_total(m: int) -> int:
    """
    Primes up to 6m+1 except 2 and 3, i.e. 2m - (P+ + P-). The minus side
    stops at 6m-1, which loses nothing since 6m is not on it.
    """
    return 2 * m - (composite_count_plus(m).total + composite_count_minus(m).total)


def truncated_count(m: int, side: ResidueSide, max_q: int) -> int:
    """Signed sum cut after level `max_q`; brackets the composite count."""
    levels = _composite_count(m, side).levels
    return sum(level.signed for level in levels if level.q <= max_q)


def count_summary(m: int) -> CountSummary:
    """All counts for one m together with bounds and level subtotals."""
    nu, k, r = index_bounds(m)
    plus = composite_count_plus(m)
    minus = composite_count_minus(m)
    return CountSummary(
        m=m,
        nu=nu,
        k=k,
        r=r,
        nu0=plus.nu0,
        k0=plus.k0,
        p_plus=plus.total,
        pi_plus=m - plus.total,
        p_minus=minus.total,
        pi_minus=m - minus.total,
        pi_total=2 * m - (plus.total + minus.total),
        levels=plus.levels + minus.levels,
    )

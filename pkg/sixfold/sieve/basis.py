"""Prime coefficient bases and their squarefree products"""

import logging
from math import comb, isqrt
from typing import TYPE_CHECKING, Iterator, List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sixfold.core.errors import DomainError
from sixfold.core.utils import _check_index, _check_range
from sixfold.forms.residue import ResidueSide

from sixfold.core.logging import handler  # isort:skip

if TYPE_CHECKING:
    from typing import Dict

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False


class IndexBounds(NamedTuple):
    """Index bounds nu, k (plus side) and r (minus side) for one m."""

    nu: int
    k: int
    r: int


class CoefficientBasis(BaseModel):
    """
    Sieving primes of one progression up to index m.

    Attributes:
        m (int): Index of the counting limit.
        side (ResidueSide): Progression the basis sieves.
        limit (int): Counting limit 6m+1 or 6m-1.
        nu (int), k (int), r (int): Index bounds.
        minus_primes (List[int]): Primes 6i-1 of the basis, increasing.
        plus_primes (List[int]): Primes 6j+1 of the basis, increasing.
    """

    m: int = Field(..., ge=1, description="Index of the counting limit.")
    side: ResidueSide = Field(..., description="Progression the basis sieves.")
    limit: int = Field(..., description="Counting limit 6m+1 or 6m-1.")
    nu: int = Field(..., ge=0, description="Index bound of the 6i-1 primes (plus side).")
    k: int = Field(..., ge=0, description="Index bound of the 6j+1 primes (plus side).")
    r: int = Field(..., ge=0, description="Index bound of both prime kinds (minus side).")
    minus_primes: List[int] = Field(..., description="Primes of the form 6i-1.")
    plus_primes: List[int] = Field(..., description="Primes of the form 6j+1.")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_primes(self) -> "CoefficientBasis":
        """Check forms, index ranges and ordering of the basis primes."""
        if self.limit != self.side.limit(self.m):
            raise ValueError(f"Limit {self.limit} does not belong to m={self.m}.")
        minus_bound, plus_bound = self.index_ranges
        for primes, residue, bound in (
            (self.minus_primes, 5, minus_bound),
            (self.plus_primes, 1, plus_bound),
        ):
            if any(p % 6 != residue for p in primes):
                raise ValueError(f"Basis primes {primes} are not all {residue} mod 6.")
            if any((p + 1) // 6 > bound for p in primes):
                raise ValueError(f"Basis primes {primes} exceed index bound {bound}.")
            if any(a >= b for a, b in zip(primes, primes[1:])):
                raise ValueError(f"Basis primes {primes} are not strictly increasing.")
        return self

    @property
    def index_ranges(self) -> Tuple[int, int]:
        """Index bounds of the 6i-1 and the 6j+1 primes on this side."""
        if self.side is ResidueSide.PLUS_ONE:
            return self.nu, self.k
        return self.r, self.r

    @property
    def nu0(self) -> int:
        """Number of 6i-1 primes in the basis."""
        return len(self.minus_primes)

    @property
    def k0(self) -> int:
        """Number of 6j+1 primes in the basis."""
        return len(self.plus_primes)

    @property
    def primes(self) -> List[int]:
        """All basis primes, increasing."""
        return sorted(self.minus_primes + self.plus_primes)

    @property
    def is_empty(self) -> bool:
        """True when no prime sieves this progression yet."""
        return not self.minus_primes and not self.plus_primes


class SieveTerm(BaseModel):
    """One squarefree product of basis primes."""

    d: int = Field(..., description="Squarefree product of the factors.")
    factors: Tuple[int, ...] = Field(..., description="Increasing basis primes composing d.")
    q: int = Field(..., ge=1, description="Level, i.e. number of factors.")
    s: int = Field(..., ge=0, description="Number of factors congruent to 5 mod 6.")
    d_residue: int = Field(..., description="d mod 6 written as +1 or -1.")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_product(self) -> "SieveTerm":
        """Check product, level and residue against the factors."""
        product = 1
        for factor in self.factors:
            product *= factor
        if product != self.d:
            raise ValueError(f"Factors {self.factors} do not multiply to {self.d}.")
        if any(a >= b for a, b in zip(self.factors, self.factors[1:])):
            raise ValueError(f"Factors {self.factors} are not strictly increasing.")
        if self.q != len(self.factors) or self.s > self.q:
            raise ValueError(f"Level {self.q} and s={self.s} do not fit {self.factors}.")
        if self.d_residue != (-1) ** self.s:
            raise ValueError(f"Residue {self.d_residue} contradicts s={self.s}.")
        return self

    @property
    def sign(self) -> int:
        """Inclusion-exclusion sign (-1)^(q-1)."""
        return 1 if self.q % 2 else -1

    @property
    def label(self) -> str:
        """Factors joined as in 5·7·13."""
        return "·".join(str(factor) for factor in self.factors)


class LevelTally(BaseModel):
    """Enumerated and combinatorial sizes of the level-q product sets."""

    q: int = Field(..., ge=1, description="Level.")
    gamma_minus: int = Field(..., description="Enumerated products congruent to 5 mod 6.")
    gamma_plus: int = Field(..., description="Enumerated products congruent to 1 mod 6.")
    gamma_minus_formula: int = Field(..., description="Binomial count of all such products.")
    gamma_plus_formula: int = Field(..., description="Binomial count of all such products.")

    @model_validator(mode="after")
    def validate_bounds(self) -> "LevelTally":
        """Pruning can only lose products."""
        if self.gamma_minus > self.gamma_minus_formula:
            raise ValueError("More products with residue -1 than subsets.")
        if self.gamma_plus > self.gamma_plus_formula:
            raise ValueError("More products with residue +1 than subsets.")
        return self


def index_bounds(m: int) -> IndexBounds:
    """
    Index bounds nu = [(1+sqrt(6m+1))/6], k = [(-1+sqrt(6m+1))/6] and
    r = [sqrt(6m)/6], computed with the exact integer square root.
    """
    _check_index(m)
    root = isqrt(_check_range(6 * m + 1, "counting limit"))
    return IndexBounds(nu=(1 + root) // 6, k=(root - 1) // 6, r=isqrt(6 * m) // 6)


def _is_prime(n: int) -> bool:
    """Deterministic trial division for basis candidates and level checks."""
    if n < 2:
        return False
    if n % 2 == 0 or n % 3 == 0:
        return n in (2, 3)
    divisor = 5
    while divisor * divisor <= n:
        if n % divisor == 0 or n % (divisor + 2) == 0:
            return False
        divisor += 6
    return True


def build_basis(m: int, side: ResidueSide) -> CoefficientBasis:
    """Collect the prime coefficients 6i-1 and 6j+1 within the index bounds."""
    bounds = index_bounds(m)
    if side is ResidueSide.PLUS_ONE:
        minus_bound, plus_bound = bounds.nu, bounds.k
    else:
        minus_bound, plus_bound = bounds.r, bounds.r
    basis = CoefficientBasis(
        m=m,
        side=side,
        limit=side.limit(m),
        nu=bounds.nu,
        k=bounds.k,
        r=bounds.r,
        minus_primes=[
            6 * i - 1 for i in range(1, minus_bound + 1) if _is_prime(6 * i - 1)
        ],
        plus_primes=[
            6 * j + 1 for j in range(1, plus_bound + 1) if _is_prime(6 * j + 1)
        ],
    )
    logger.debug(
        "Basis for m=%s on the %s side: %s | %s",
        m,
        side.value,
        basis.minus_primes,
        basis.plus_primes,
    )
    return basis


def iter_products(
    primes: List[int], limit: Optional[int] = None
) -> Iterator[Tuple[Tuple[int, ...], int, int]]:
    """
    Walk the squarefree products of `primes` depth first, yielding
    (factors, d, s) in lexicographic order of the factor sequences.

    With a `limit`, a branch is abandoned as soon as its partial product
    times the next prime exceeds the limit; the primes must be increasing.
    """
    stack = [((), 1, 0, 0)]
    while stack:
        factors, product, s, start = stack.pop()
        if factors:
            yield factors, product, s
        children = []
        for index in range(start, len(primes)):
            prime = primes[index]
            d = product * prime
            if limit is not None and d > limit:
                break
            children.append((factors + (prime,), d, s + (prime % 6 == 5), index + 1))
        stack.extend(reversed(children))


def enumerate_terms(basis: CoefficientBasis, prune: bool = True) -> List[SieveTerm]:
    """
    Every squarefree product d <= basis.limit of at least one basis prime,
    lexicographic by factor sequence.

    `prune=False` emits all 2^(nu0+k0)-1 subsets regardless of the limit;
    it exists to cross-check the binomial level sizes.
    """
    terms = [
        SieveTerm.model_construct(
            d=d, factors=factors, q=len(factors), s=s, d_residue=(-1) ** s
        )
        for factors, d, s in iter_products(
            basis.primes, basis.limit if prune else None
        )
    ]
    logger.debug(
        "Enumerated %s terms for m=%s on the %s side (prune=%s).",
        len(terms),
        basis.m,
        basis.side.value,
        prune,
    )
    return terms


def gamma(q: int, nu0: int, k0: int) -> Tuple[int, int]:
    """
    Number of level-q products with residue -1 and +1 mod 6 over a basis
    of nu0 primes 6i-1 and k0 primes 6j+1: the parity of the count s of
    6i-1 factors decides the residue (-1)^s.

    Example:
        >>> gamma(2, 3, 2)
        (6, 4)
    """
    if q < 1:
        raise DomainError(f"Level `q` must be at least 1, not {q}.")
    gamma_minus, gamma_plus = 0, 0
    for s in range(0, q + 1):
        size = comb(nu0, s) * comb(k0, q - s)
        if s % 2:
            gamma_minus += size
        else:
            gamma_plus += size
    return gamma_minus, gamma_plus


def tally_levels(basis: CoefficientBasis, terms: List[SieveTerm]) -> List[LevelTally]:
    """Per-level residue counts of `terms` next to their binomial values."""
    counts: "Dict[int, List[int]]" = {}
    for term in terms:
        tally = counts.setdefault(term.q, [0, 0])
        tally[0 if term.d_residue == -1 else 1] += 1
    tallies = []
    for q in sorted(counts):
        minus_formula, plus_formula = gamma(q, basis.nu0, basis.k0)
        tallies.append(
            LevelTally(
                q=q,
                gamma_minus=counts[q][0],
                gamma_plus=counts[q][1],
                gamma_minus_formula=minus_formula,
                gamma_plus_formula=plus_formula,
            )
        )
    return tallies

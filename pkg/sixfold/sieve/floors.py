"""Closed floor forms of the class counts as printed in the worked examples"""

import logging
from math import gcd

from sixfold.core.errors import ContractViolation
from sixfold.core.utils import _check_index
from sixfold.forms.residue import ResidueSide
from sixfold.sieve.basis import SieveTerm

from sixfold.core.logging import handler  # isort:skip

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False


def level_constant(s: int, side: ResidueSide) -> int:
    """
    Multiplier of d in the numerator of a level q >= 2 floor: `a` on the
    plus side (1 for odd s, 5 for even s), `b` on the minus side (5 for
    odd s, 1 for even s).
    """
    odd = s % 2 == 1
    if side is ResidueSide.PLUS_ONE:
        return 1 if odd else 5
    return 5 if odd else 1


def _numerator_shift(d: int, q: int, s: int, side: ResidueSide) -> int:
    """The N in [(6m + N)/(6d)]."""
    if q == 1:
        own_class = d % 6 == side.target
        if side is ResidueSide.PLUS_ONE:
            return 1 - d if own_class else d + 1
        return -d - 1 if own_class else d - 1
    return level_constant(s, side) * d + side.sign


def _check_divisor(d: int, q: int) -> None:
    if d < 5 or gcd(d, 6) != 1:
        raise ContractViolation(f"Divisor {d} is not a product of primes >= 5.")
    if q < 1:
        raise ContractViolation(f"Level {q} of divisor {d} must be positive.")


def paper_offset(term: SieveTerm, side: ResidueSide) -> int:
    """
    Offset c of the m-form [(m + c)/d] of a term's floor. The numerator
    shift is always divisible by six, so both forms are the same number.

    Example:
        >>> paper_offset(SieveTerm(d=35, factors=(5, 7), q=2, s=1, d_residue=-1),
        ...              ResidueSide.MINUS_ONE)
        29
    """
    _check_divisor(term.d, term.q)
    shift = _numerator_shift(term.d, term.q, term.s, side)
    if shift % 6:
        raise ContractViolation(f"Shift {shift} of {term.label} is not divisible by 6.")
    return shift // 6


def paper_floor(term: SieveTerm, side: ResidueSide, m: int) -> int:
    """
    Closed floor [(6m + N)/(6d)] of a term. It agrees with `class_count`
    for every d up to the limit and is 0 beyond it.
    """
    _check_index(m)
    _check_divisor(term.d, term.q)
    numerator = 6 * m + _numerator_shift(term.d, term.q, term.s, side)
    return max(0, numerator // (6 * term.d))


def subclass_size(prime: int, side: ResidueSide, m: int) -> int:
    """
    Members of the progression up to index m that are proper multiples of
    a single basis prime: the sizes of the subclasses cut out by 6i-1 and
    6j+1 at the first level.

    Example:
        >>> subclass_size(5, ResidueSide.MINUS_ONE, 50)
        9
    """
    residue = prime % 6
    if residue not in (1, 5):
        raise ContractViolation(f"{prime} is not of the form 6i-1 or 6j+1.")
    term = SieveTerm(
        d=prime,
        factors=(prime,),
        q=1,
        s=int(residue == 5),
        d_residue=1 if residue == 1 else -1,
    )
    size = paper_floor(term, side, m)
    logger.debug("Subclass of %s on the %s side up to m=%s: %s", prime, side.value, m, size)
    return size

"""Sixfold top module"""

from sixfold.core.configuration import Configuration
from sixfold.core.session import Session
from sixfold.core.sixfold import Sixfold
from sixfold.forms.residue import ResidueSide
from sixfold.sieve.engine import (
    composite_count_minus,
    composite_count_plus,
    count_summary,
    prime_count_minus,
    prime_count_plus,
    prime_count_total,
)

__all__ = [
    "Sixfold",
    "Configuration",
    "Session",
    "ResidueSide",
    "composite_count_plus",
    "composite_count_minus",
    "prime_count_plus",
    "prime_count_minus",
    "prime_count_total",
    "count_summary",
]

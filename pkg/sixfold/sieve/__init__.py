"""Coefficient bases and the inclusion-exclusion engine"""

from sixfold.sieve.basis import (
    CoefficientBasis,
    IndexBounds,
    LevelTally,
    SieveTerm,
    build_basis,
    enumerate_terms,
    gamma,
    index_bounds,
    tally_levels,
)
from sixfold.sieve.engine import (
    CompositeCount,
    CountSummary,
    LevelSubtotal,
    class_count,
    truncated_count,
)
from sixfold.sieve.floors import paper_floor, paper_offset, subclass_size

__all__ = [
    "CoefficientBasis",
    "CompositeCount",
    "CountSummary",
    "IndexBounds",
    "LevelSubtotal",
    "LevelTally",
    "SieveTerm",
    "build_basis",
    "class_count",
    "enumerate_terms",
    "gamma",
    "index_bounds",
    "paper_floor",
    "paper_offset",
    "subclass_size",
    "tally_levels",
    "truncated_count",
]

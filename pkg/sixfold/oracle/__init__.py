"""Sieve of Eratosthenes oracle"""

from sixfold.oracle.table import (
    OracleCounts,
    PrimalityTable,
    oracle_class_count,
    oracle_counts,
    sieve_upto,
)

__all__ = [
    "OracleCounts",
    "PrimalityTable",
    "oracle_class_count",
    "oracle_counts",
    "sieve_upto",
]

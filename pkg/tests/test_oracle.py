"""Tests for the sieve oracle"""

import pytest


def test_sieve_upto_small():
    from sixfold.oracle.table import sieve_upto

    table = sieve_upto(30)

    assert table.primes().tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert table.prime_count() == 10
    assert not table.is_prime(0)
    assert not table.is_prime(1)
    assert table.is_prime(2) and table.is_prime(3)


@pytest.mark.parametrize("limit, count", [(61, 18), (100, 25), (301, 62), (1000, 168)])
def test_prime_count(limit, count):
    """Textbook values of pi(x)"""
    from sixfold.oracle.table import sieve_upto

    assert sieve_upto(limit).prime_count() == count


def test_table_against_trial_division(oracle_table):
    from sixfold.sieve.basis import _is_prime

    for n in range(0, 20000):
        assert oracle_table.is_prime(n) == _is_prime(n), n


def test_table_lookups_outside_range():
    from sixfold.core.errors import DomainError
    from sixfold.oracle.table import sieve_upto

    table = sieve_upto(30)

    with pytest.raises(DomainError):
        table.is_prime(31)
    with pytest.raises(DomainError):
        table.prime_count(100)


@pytest.mark.parametrize("limit", [0, -5, 3.5])
def test_sieve_upto_rejects_bad_limits(limit):
    from sixfold.core.errors import DomainError
    from sixfold.oracle.table import sieve_upto

    with pytest.raises(DomainError):
        sieve_upto(limit)


def test_sieve_upto_respects_the_cap():
    """A limit above oracle_cap is refused before any allocation"""
    from sixfold.core.errors import OracleCapExceeded
    from sixfold.core.sixfold import Sixfold
    from sixfold.oracle.table import sieve_upto

    Sixfold(oracle_cap=100)

    assert sieve_upto(100).prime_count() == 25
    with pytest.raises(OracleCapExceeded):
        sieve_upto(101)


def test_table_validation():
    """Tables claiming 1 prime or missing 2 are rejected"""
    import numpy as np
    from pydantic import ValidationError

    from sixfold.oracle.table import PrimalityTable

    flags = np.zeros(11, dtype=bool)
    flags[[2, 3, 5, 7]] = True
    assert PrimalityTable(limit=10, flags=flags).prime_count() == 4

    broken = flags.copy()
    broken[1] = True
    with pytest.raises(ValidationError):
        PrimalityTable(limit=10, flags=broken)
    with pytest.raises(ValidationError):
        PrimalityTable(limit=11, flags=flags)


@pytest.mark.parametrize(
    "m, counts",
    [
        (50, (22, 28, 18, 32, 60)),
        (1, (0, 1, 0, 1, 2)),
        (10, (3, 7, 1, 9, 16)),
    ],
)
def test_oracle_counts(m, counts):
    from sixfold.oracle.table import oracle_counts

    summary = oracle_counts(m)

    assert tuple(summary.counts.values()) == counts


def test_oracle_counts_self_consistency(oracle_table):
    """Primes 1 and 5 mod 6 plus 2 and 3 make up all primes up to 6m+1"""
    from sixfold.oracle.table import oracle_counts

    for m in (1, 7, 50, 999, 10000):
        summary = oracle_counts(m, oracle_table)
        top = 6 * m + 1
        assert summary.pi_total + 2 == oracle_table.prime_count(top)
        residues = oracle_table.primes()
        residues = residues[residues <= top] % 6
        assert summary.pi_plus == int((residues == 1).sum())
        assert summary.pi_minus == int((residues == 5).sum())


def test_oracle_shares_no_engine_code():
    """The referee only depends on the core and the residue forms"""
    import ast
    import inspect

    from sixfold.oracle import table

    tree = ast.parse(inspect.getsource(table))
    modules = {
        node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom)
    } | {
        alias.name
        for node in ast.walk(tree)
        if isinstance(node, ast.Import)
        for alias in node.names
    }
    internal = {name for name in modules if name and name.startswith("sixfold")}

    assert internal <= {
        "sixfold.core.errors",
        "sixfold.core.logging",
        "sixfold.core.utils",
        "sixfold.forms.residue",
    }


def test_oracle_counts_validation():
    from pydantic import ValidationError

    from sixfold.oracle.table import OracleCounts

    with pytest.raises(ValidationError):
        OracleCounts(m=10, p_plus=3, pi_plus=6, p_minus=1, pi_minus=9, pi_total=15)


def test_oracle_counts_short_table():
    from sixfold.core.errors import DomainError
    from sixfold.oracle.table import oracle_counts, sieve_upto

    with pytest.raises(DomainError):
        oracle_counts(50, sieve_upto(300))


@pytest.mark.parametrize(
    "d, q, side, expected",
    [(5, 1, "plus", 10), (35, 2, "minus", 2), (91, 2, "minus", 0)],
)
def test_oracle_class_count(d, q, side, expected):
    from sixfold.forms.residue import ResidueSide
    from sixfold.oracle.table import oracle_class_count

    assert oracle_class_count(d, q, ResidueSide(side), 50) == expected


def test_oracle_class_count_contract():
    from sixfold.core.errors import ContractViolation
    from sixfold.forms.residue import ResidueSide
    from sixfold.oracle.table import oracle_class_count

    with pytest.raises(ContractViolation):
        oracle_class_count(9, 1, ResidueSide.PLUS_ONE, 50)

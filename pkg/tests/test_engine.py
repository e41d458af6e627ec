"""Tests for the inclusion-exclusion counts"""

import pytest


@pytest.mark.parametrize(
    "d, q, side, m, expected",
    [
        (5, 1, "plus", 50, 10),
        (35, 2, "minus", 50, 2),
        (55, 2, "plus", 50, 1),
        (35, 2, "plus", 10, 0),
        (7, 1, "minus", 10, 1),
    ],
)
def test_class_count(d, q, side, m, expected):
    """Multiples of d in the class of the progression"""
    from sixfold.forms.residue import ResidueSide
    from sixfold.sieve.engine import class_count

    assert class_count(d, q, ResidueSide(side), m) == expected


def test_class_count_contract():
    """Divisors sharing a factor with 6 or beyond the limit are refused"""
    from sixfold.core.errors import ContractViolation, DomainError
    from sixfold.forms.residue import ResidueSide
    from sixfold.sieve.engine import class_count

    with pytest.raises(ContractViolation):
        class_count(15, 2, ResidueSide.PLUS_ONE, 50)
    with pytest.raises(ContractViolation):
        class_count(385, 3, ResidueSide.PLUS_ONE, 50)
    with pytest.raises(DomainError):
        class_count(5, 0, ResidueSide.PLUS_ONE, 50)
    with pytest.raises(DomainError):
        class_count(5, 1, ResidueSide.PLUS_ONE, 0)


@pytest.mark.parametrize(
    "d, q, side",
    [(7, 2, "plus"), (5, 3, "minus"), (35, 1, "minus"), (25, 1, "plus")],
)
def test_class_count_level_must_fit_divisor(d, q, side):
    """A prime only counts at level one, a product only above it"""
    from sixfold.core.errors import ContractViolation
    from sixfold.forms.residue import ResidueSide
    from sixfold.sieve.engine import class_count

    with pytest.raises(ContractViolation):
        class_count(d, q, ResidueSide(side), 50)


def test_class_count_against_loop():
    """Closed count and the literal loop agree for every enumerated term"""
    from sixfold.forms.residue import ResidueSide
    from sixfold.oracle.table import oracle_class_count
    from sixfold.sieve.basis import build_basis, enumerate_terms
    from sixfold.sieve.engine import class_count

    for m in range(1, 301):
        for side in ResidueSide:
            for term in enumerate_terms(build_basis(m, side)):
                assert class_count(term.d, term.q, side, m) == oracle_class_count(
                    term.d, term.q, side, m
                ), (m, side, term.factors)


def test_example_1():
    """P+(301) = 22 and pi+(301) = 28"""
    from sixfold.sieve.engine import composite_count_plus, prime_count_plus

    count = composite_count_plus(50)

    assert count.total == 22
    assert int(count) == 22
    assert prime_count_plus(50) == 28
    assert [(level.q, level.subtotal) for level in count.levels] == [(1, 27), (2, 5)]
    assert [level.signed for level in count.levels] == [27, -5]
    assert (count.nu0, count.k0) == (3, 2)


def test_example_2():
    """P-(299) = 18 and pi-(299) = 32"""
    from sixfold.sieve.engine import composite_count_minus, prime_count_minus

    count = composite_count_minus(50)

    assert count.total == 18
    assert prime_count_minus(50) == 32
    assert [(level.q, level.subtotal) for level in count.levels] == [(1, 24), (2, 6)]
    assert count.terms == 4 + 6
    assert (count.nu0, count.k0) == (2, 2)


def test_prime_count_total():
    """Theorem 4: 2*50 - (22 + 18) = 60"""
    from sixfold.sieve.engine import prime_count_total

    assert prime_count_total(50) == 60
    assert prime_count_total(10) == 16
    assert prime_count_total(1) == 2


@pytest.mark.parametrize(
    "m, p_plus, pi_plus, p_minus, pi_minus",
    [(1, 0, 1, 0, 1), (2, 0, 2, 0, 2), (10, 3, 7, 1, 9)],
)
def test_small_counts(m, p_plus, pi_plus, p_minus, pi_minus):
    from sixfold.sieve.engine import (
        composite_count_minus,
        composite_count_plus,
        prime_count_minus,
        prime_count_plus,
    )

    assert composite_count_plus(m).total == p_plus
    assert prime_count_plus(m) == pi_plus
    assert composite_count_minus(m).total == p_minus
    assert prime_count_minus(m) == pi_minus


def test_count_summary():
    from sixfold.sieve.engine import count_summary

    summary = count_summary(50)

    assert (summary.nu, summary.k, summary.r, summary.nu0, summary.k0) == (3, 2, 2, 3, 2)
    assert summary.counts == {
        "p_plus": 22,
        "pi_plus": 28,
        "p_minus": 18,
        "pi_minus": 32,
        "pi_total": 60,
    }
    assert [level.subtotal for level in summary.level_tallies_plus] == [27, 5]
    assert [level.subtotal for level in summary.level_tallies_minus] == [24, 6]
    assert "P+ = 22, pi+ = 28, P- = 18, pi- = 32, pi = 60" in str(summary)


def test_count_summary_builds_each_basis_once(mocker):
    from sixfold.sieve import engine

    spy = mocker.spy(engine, "build_basis")

    summary = engine.count_summary(200)

    assert spy.call_count == 2
    assert (summary.nu0, summary.k0) == (5, 4)


def test_count_summary_complements():
    """Counts that do not add up to m are rejected"""
    from pydantic import ValidationError

    from sixfold.sieve.engine import CountSummary

    with pytest.raises(ValidationError):
        CountSummary(
            m=50, p_plus=22, pi_plus=27, p_minus=18, pi_minus=32, pi_total=59
        )
    with pytest.raises(ValidationError):
        CountSummary(
            m=50, p_plus=22, pi_plus=28, p_minus=18, pi_minus=32, pi_total=61
        )


def test_counts_match_the_sieve(oracle_table):
    """Engine against direct lookup for m <= 2000"""
    from sixfold.oracle.table import oracle_counts
    from sixfold.sieve.engine import count_summary

    for m in range(1, 2001):
        assert count_summary(m).counts == oracle_counts(m, oracle_table).counts, m


def test_bonferroni_bracketing():
    """Odd truncations overestimate, even ones underestimate"""
    from sixfold.forms.residue import ResidueSide
    from sixfold.sieve.engine import _composite_count, truncated_count

    for m in range(1, 1001):
        for side in ResidueSide:
            count = _composite_count(m, side)
            partial = 0
            for level in count.levels:
                partial += level.signed
                if level.q % 2:
                    assert partial >= count.total, (m, side, level.q)
                else:
                    assert partial <= count.total, (m, side, level.q)
            if count.levels:
                assert truncated_count(m, side, count.levels[-1].q) == count.total


def test_truncated_count_example():
    """Example 2 cut after the first level counts 9 + 4 + 7 + 4"""
    from sixfold.forms.residue import ResidueSide
    from sixfold.sieve.engine import truncated_count

    assert truncated_count(50, ResidueSide.MINUS_ONE, 1) == 24
    assert truncated_count(50, ResidueSide.MINUS_ONE, 2) == 18


def test_pruned_terms_count_nothing():
    """Products beyond the limit have no multiple in the class up to the limit"""
    from sixfold.forms.residue import ResidueSide
    from sixfold.oracle.table import oracle_class_count
    from sixfold.sieve.basis import build_basis, enumerate_terms

    for m in (50, 123, 200, 300):
        for side in ResidueSide:
            basis = build_basis(m, side)
            kept = {term.factors for term in enumerate_terms(basis)}
            for term in enumerate_terms(basis, prune=False):
                if term.factors in kept:
                    continue
                assert term.d > basis.limit
                assert oracle_class_count(term.d, term.q, side, m) == 0


def test_prime_count_total_is_monotone():
    """pi(6m+1) grows by 0, 1 or 2 from one m to the next"""
    from sixfold.sieve.engine import prime_count_total

    previous = prime_count_total(1)
    for m in range(2, 1001):
        current = prime_count_total(m)
        assert current - previous in (0, 1, 2)
        previous = current


def test_engine_rejects_huge_index():
    from sixfold.core.errors import ArithmeticRangeError
    from sixfold.sieve.engine import composite_count_plus

    with pytest.raises(ArithmeticRangeError):
        composite_count_plus(2**62)

"""Conftest for sixfold"""
import logging
from typing import TYPE_CHECKING

import pytest
from click.testing import CliRunner

if TYPE_CHECKING:
    from sixfold.oracle.table import PrimalityTable
    from sixfold.sieve.basis import CoefficientBasis

ORACLE_M_MAX = 10**4


@pytest.fixture(autouse=True, scope="function")
def reset_sixfold_session():
    from sixfold.core.session import Session
    from sixfold.core.utils import _default_config

    root = logging.getLogger()
    level = root.level
    Session.sixfold = None
    _default_config.cache_clear()
    yield
    Session.sixfold = None
    _default_config.cache_clear()
    root.setLevel(level)


@pytest.fixture(scope="session")
def oracle_table() -> "PrimalityTable":
    """Primality flags up to 6 * 10**4 + 1."""
    from sixfold.oracle.table import sieve_upto

    return sieve_upto(6 * ORACLE_M_MAX + 1)


@pytest.fixture(scope="function")
def plus_basis_50() -> "CoefficientBasis":
    from sixfold.forms.residue import ResidueSide
    from sixfold.sieve.basis import build_basis

    return build_basis(50, ResidueSide.PLUS_ONE)


@pytest.fixture(scope="function")
def minus_basis_50() -> "CoefficientBasis":
    from sixfold.forms.residue import ResidueSide
    from sixfold.sieve.basis import build_basis

    return build_basis(50, ResidueSide.MINUS_ONE)


@pytest.fixture(scope="function")
def runner() -> CliRunner:
    return CliRunner()

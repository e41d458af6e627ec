"""Sixfold session module"""

import os
from typing import TYPE_CHECKING

from dotenv import load_dotenv

from sixfold.core.configuration import Configuration
from sixfold.core.session import Session

if TYPE_CHECKING:
    from typing import Optional

    from sixfold.forms.residue import ResidueSide
    from sixfold.report.bench import BenchReport
    from sixfold.report.paper import PaperReport
    from sixfold.report.tables import TermTable
    from sixfold.report.verify import VerifyReport
    from sixfold.sieve.engine import CountSummary


class Sixfold:
    """
    Entry point for counting primes 6t+-1 under one configuration.

    Creating an instance registers it as the active session, so that every
    library function reads its limits (`oracle_cap`, `max_value`) from it.

    Args:
        config (Configuration, optional): A ready Configuration object.
            If not provided, one is built from the environment and `kwargs`.
        env (str, optional): Path to an env-file with `SIXFOLD_` variables,
            loaded with `python-dotenv`. Defaults to None.
        **kwargs: Configuration fields given directly instead of a
            Configuration object.
    """

    _session = Session

    def __init__(
        self,
        config: "Optional[Configuration]" = None,
        env: "Optional[str]" = None,
        **kwargs,
    ) -> None:
        self._config = None

        if env:
            if not os.path.exists(env):
                raise OSError(f"File `{env}` does not exist")
            loaded = load_dotenv(env, verbose=True, override=True)
            if not loaded:
                raise RuntimeError(f"Not able to parse .env file: {env}")

        if config is not None and not kwargs:
            self.config = config
        elif config is None:
            self.config = Configuration(**kwargs)
        else:
            raise ValueError(
                """`config`-keyword is defined among others.
                The `config`-keyword is reserved for passing a config-object directly.
                Please specify kwargs for to be passed to the `Configuration`-object _OR_
                an instance of this `Configuration`-object directly."""
            )

        self._session.sixfold = self

    @property
    def config(self) -> Configuration:
        """Property returning the sixfold Configuration"""
        return self._config

    @config.setter
    def config(self, value) -> None:
        """Property setter of the sixfold Configuration"""
        if not isinstance(value, Configuration):
            raise TypeError(
                f"""The passed config-kwarg with value `{value}`
                is not of type `{Configuration}`, but of type {type(value)}."""
            )
        self._config = value

    @property
    def context(self) -> "Session":
        """Return the sixfold session"""
        return self._session

    def summary(self, m: int) -> "CountSummary":
        """All counts of both progressions up to index m."""
        from sixfold.sieve.engine import count_summary

        return count_summary(m)

    def terms(
        self, m: int, side: "ResidueSide", max_q: "Optional[int]" = None
    ) -> "TermTable":
        """Term table of one progression."""
        from sixfold.report.tables import term_table

        return term_table(m, side, max_q)

    def verify(self, m_max: int, fail_fast: bool = False) -> "VerifyReport":
        """Compare engine and oracle for every m up to `m_max`."""
        from sixfold.report.verify import run_verification

        return run_verification(m_max, fail_fast)

    def paper_check(self) -> "PaperReport":
        """Check the printed intermediates of both worked examples."""
        from sixfold.report.paper import paper_check

        return paper_check()

    def bench(self, m: int, repetitions: int = 1) -> "BenchReport":
        """Time engine and oracle at m."""
        from sixfold.report.bench import run_bench

        return run_bench(m, repetitions)

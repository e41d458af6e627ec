"""Core utils of the sixfold core"""

import logging
from functools import lru_cache
from typing import TYPE_CHECKING

from sixfold.core.errors import ArithmeticRangeError, DomainError

from sixfold.core.logging import handler  # isort:skip

if TYPE_CHECKING:
    from sixfold.core.configuration import Configuration

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False


@lru_cache
def _default_config() -> "Configuration":
    from sixfold.core.configuration import Configuration

    return Configuration()


def get_config() -> "Configuration":
    """Configuration of the active session, or the default one."""
    from sixfold.core.session import Session

    if Session.sixfold is not None:
        return Session.sixfold.config
    return _default_config()


def _check_index(m: int) -> int:
    """Reject non-integral or non-positive progression indices."""
    if isinstance(m, bool) or not isinstance(m, int):
        raise DomainError(f"Index `m` must be an integer, not {type(m)}.")
    if m < 1:
        raise DomainError(f"Index `m` must be at least 1, not {m}.")
    return m


def _check_range(value: int, what: str = "value") -> int:
    """Reject integers above the configured word range."""
    max_value = get_config().max_value
    if value > max_value:
        logger.debug("Rejecting %s %s above max_value %s.", what, value, max_value)
        raise ArithmeticRangeError(
            f"The {what} {value} exceeds the configured max_value {max_value}."
        )
    return value

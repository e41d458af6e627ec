"""Process-wide sixfold session"""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Optional

    from sixfold.core.sixfold import Sixfold


class Session:
    """Object giving the current sixfold session."""

    sixfold: "Optional[Sixfold]" = None

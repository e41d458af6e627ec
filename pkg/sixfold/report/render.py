"""Text, JSON and CSV renderings of the report models"""

import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, List, Optional, Union

import oyaml as yaml
import pandas as pd

from sixfold.core.configuration import OutputFormat
from sixfold.core.utils import get_config

from sixfold.core.logging import handler  # isort:skip

if TYPE_CHECKING:
    from typing import Any, Dict, Set

    from pydantic import BaseModel

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False


def print_model(model: "BaseModel", key: str, exclude: "Optional[Set[str]]" = None) -> str:
    """Pretty print the model fields as YAML under `key`"""
    dumped = model.model_dump(mode="json", exclude=exclude, exclude_none=True)
    return yaml.dump({key: dumped})


def to_json(model: "BaseModel") -> str:
    """Serialize a model with its fields in declaration order."""
    return json.dumps(model.model_dump(mode="json", exclude_none=True), indent=2)


def integer_frame(records: "List[Dict[str, Any]]", columns: List[str]) -> pd.DataFrame:
    """
    DataFrame of `records` in the order of `columns`. Numeric columns are
    nullable integers so that missing cells never turn counts into floats.
    """
    frame = pd.DataFrame.from_records(records, columns=columns)
    for column in columns:
        dtype = frame[column].dtype
        if pd.api.types.is_numeric_dtype(dtype) and not pd.api.types.is_bool_dtype(dtype):
            frame[column] = frame[column].astype("Int64")
    return frame


def to_csv(frame: pd.DataFrame) -> str:
    """CSV with header and without index."""
    return frame.to_csv(index=False)


def resolve_format(fmt: Optional[Union[OutputFormat, str]]) -> OutputFormat:
    """The requested format, or the configured default."""
    if fmt is None:
        fmt = get_config().default_format
    return OutputFormat(fmt.value if isinstance(fmt, OutputFormat) else fmt)


def emit(content: str, out: Optional[Union[str, Path]] = None) -> Optional[Path]:
    """Write `content` to `out` with the configured encoding, if given."""
    if out is None:
        return None
    path = Path(out)
    path.write_text(content, encoding=get_config().encoding)
    logger.debug("Wrote %s characters to %s.", len(content), path)
    return path

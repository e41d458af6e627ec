"""General config for the sixfold prime counter"""

import logging
from enum import Enum
from typing import Optional, Union

from pydantic_settings import BaseSettings, SettingsConfigDict  # isort: skip

from pydantic import AliasChoices, Field, field_validator  # isort: skip

DEFAULT_ORACLE_CAP = 10**8
NATIVE_WORD_MAX = 2**63 - 1


class Loglevel(Enum):
    """Enum mapping for default log levels"""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class OutputFormat(Enum):
    """Renderings supported by the command line interface"""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class Configuration(BaseSettings):
    """General config for sixfold"""

    oracle_cap: int = Field(
        DEFAULT_ORACLE_CAP,
        description="""Largest limit the sieve oracle is allowed to allocate.
        A request above it raises `OracleCapExceeded` instead of exhausting memory.""",
    )

    max_value: int = Field(
        NATIVE_WORD_MAX,
        description="""Largest integer the engine accepts as a counting limit
        or factor product. Defaults to the signed 64-bit word range.""",
    )

    encoding: str = Field(
        "utf-8",
        description="Encoding used for writing reports and the errata ledger.",
    )

    default_format: Union[OutputFormat, str] = Field(
        OutputFormat.TEXT,
        description="Rendering used by the CLI when `--format` is not given.",
    )

    loglevel: Optional[Union[Loglevel, str]] = Field(
        None,
        description="Set level of logging messages",
        validation_alias=AliasChoices("loglevel", "log_level", "SIXFOLD_LOGLEVEL"),
    )

    model_config = SettingsConfigDict(
        env_prefix="SIXFOLD_", use_enum_values=True
    )

    @field_validator("loglevel")
    def get_loglevel(
        cls, val: Optional[Union[Loglevel, str]]
    ) -> Optional[Union[Loglevel, str]]:
        """Set log level for package"""
        if isinstance(val, Loglevel):
            val = val.value
        if val:
            logging.getLogger().setLevel(str(val).upper())
        return val

    @field_validator("oracle_cap")
    def validate_oracle_cap(cls, val: int) -> int:
        """The oracle has to be able to sieve at least up to 7."""
        if val < 7:
            raise ValueError(f"`oracle_cap` must be at least 7, not {val}.")
        return val

    @field_validator("max_value")
    def validate_max_value(cls, val: int) -> int:
        """The smallest counting limit is 6*1+1."""
        if val < 7:
            raise ValueError(f"`max_value` must be at least 7, not {val}.")
        return val

    @field_validator("default_format")
    def validate_default_format(
        cls, val: Union[OutputFormat, str]
    ) -> Union[OutputFormat, str]:
        """Only the renderings of the CLI are allowed."""
        return OutputFormat(
            val.value if isinstance(val, OutputFormat) else val
        ).value

"""Drawdown, duration and temporal risk analytics."""

from ._core import *  # noqa: F401,F403
from ._core import (
    ConfigError,
    DegenerateInputError,
    DomainError,
    ParseError,
    ReturnSeries,
    SizeError,
    WindowSpec,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Coupled 1D channel / 2D floodplain shallow-water solver."""

from ._core import (
    ConfigError,
    Error,
    Simulation,
    StabilityError,
    Stoker,
    case_config_text,
    run_case,
    run_config_text,
)

__all__ = [
    "ConfigError",
    "Error",
    "Simulation",
    "StabilityError",
    "Stoker",
    "case_config_text",
    "run_case",
    "run_config_text",
]

"""
Toolkit settings — defaults for every tunable, overridable from CLI flags.

There are no environment variables: a run is fully determined by its
arguments and input files.
"""

from __future__ import annotations

import argparse
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from etlogic.services.semantics import NON_DEGENERATE_FLAVORS, ModelFlavor

BUDGET_CAP = 10_000_000


class ToolkitSettings(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    universe_depth: int = Field(default=3, ge=0, le=4)
    budget: int = Field(default=200_000, ge=1, le=BUDGET_CAP)
    include_unit_models: bool = False
    flavors: tuple[ModelFlavor, ...] = NON_DEGENERATE_FLAVORS

    @field_validator("flavors", mode="before")
    @classmethod
    def _parse_flavors(cls, value: Any) -> Any:
        if isinstance(value, str):
            value = [value]
        return tuple(ModelFlavor.parse(v) if isinstance(v, str) else v for v in value)

    @field_validator("flavors")
    @classmethod
    def _nonempty(cls, value: tuple[ModelFlavor, ...]) -> tuple[ModelFlavor, ...]:
        if not value:
            raise ValueError("at least one flavor is required")
        return tuple(dict.fromkeys(value))


DEFAULT_SETTINGS = ToolkitSettings()


def settings_from_args(args: argparse.Namespace, base: ToolkitSettings = DEFAULT_SETTINGS) -> ToolkitSettings:
    """Overlay whichever tunables the parsed command line actually set.

    Raises:
        pydantic.ValidationError: an out-of-range value (depth, budget).
    """
    overrides: dict[str, Any] = {}
    for name in ("universe_depth", "budget"):
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    if getattr(args, "include_unit_models", False):
        overrides["include_unit_models"] = True
    flavors = getattr(args, "flavors", None)
    if flavors:
        overrides["flavors"] = flavors
    if not overrides:
        return base
    return ToolkitSettings.model_validate({**base.model_dump(), **overrides})

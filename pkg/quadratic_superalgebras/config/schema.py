# Pydantic configuration schemas for the engine
# These define the structure of configs/engine.yaml and the defaults used without one

from pathlib import Path
from typing import Optional

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from ..core.errors import InputError


class SamplingConfig(BaseModel):
    # Seeded random rationals for property suites and random constructions

    seed: int = Field(default=20240601, ge=0, description="Seed for numpy default_rng")
    height: int = Field(default=5, ge=1, le=1000, description="Bound on numerators/denominators")
    terms: int = Field(default=3, ge=1, le=50, description="Monomials per random cochain")
    property_samples: int = Field(default=200, ge=1, description="Random Poisson-bracket triples")
    extension_samples: int = Field(default=50, ge=1, description="Random extension data")
    commuting_pairs: int = Field(default=1000, ge=1, description="Random sp(2) commuting pairs")


class EngineConfig(BaseModel):
    # Size guards and cross-checks of the cohomology engine

    max_cochain_dim: int = Field(
        default=200000, ge=1, description="Refuse cochain spaces larger than this"
    )
    default_max_degree: int = Field(
        default=2, ge=0, le=12, description="Highest degree of a Betti table by default"
    )
    cross_check_poisson: bool = Field(
        default=True, description="Compare the differential with -{I, .} on every basis element"
    )
    default_format: str = Field(default="text", description="CLI output format (text, json)")
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)

    @field_validator("default_format")
    @classmethod
    def known_format(cls, v: str) -> str:
        if v not in ("text", "json"):
            raise ValueError(f"unknown output format {v!r}")
        return v

    @classmethod
    def from_yaml(cls, path: Path) -> "EngineConfig":
        # Load and validate settings from a YAML file; an empty file gives the defaults
        try:
            with open(path, "r") as f:
                data = yaml.safe_load(f)
            return cls(**(data or {}))
        except (OSError, TypeError, yaml.YAMLError, ValidationError) as exc:
            raise InputError(f"bad config {path}: {exc}") from None


def load_config(path: Optional[Path] = None) -> EngineConfig:
    return EngineConfig.from_yaml(Path(path)) if path else EngineConfig()

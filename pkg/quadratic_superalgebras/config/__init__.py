# Configuration schemas and loading utilities

from .schema import EngineConfig, SamplingConfig, load_config

__all__ = [
    "EngineConfig",
    "SamplingConfig",
    "load_config",
]

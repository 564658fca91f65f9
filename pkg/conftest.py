# Shared fixtures: catalog algebras, seeded generators and the engine config

from pathlib import Path

import pytest

from quadratic_superalgebras import catalog
from quadratic_superalgebras.config import EngineConfig
from quadratic_superalgebras.core.sampling import make_rng

ROOT = Path(__file__).parent
ALGEBRAS = ROOT / "algebras"


@pytest.fixture
def config():
    return EngineConfig()


@pytest.fixture
def rng(config):
    return make_rng(config.sampling.seed)


@pytest.fixture
def g41():
    return catalog.g_4_1_s()


@pytest.fixture
def g42():
    return catalog.g_4_2_s()


@pytest.fixture
def g6s():
    return catalog.g_6_s()


@pytest.fixture(params=["g_4_1_s", "g_4_2_s", "g_6_s"])
def elementary(request):
    return catalog.build(request.param)


@pytest.fixture
def fixture_path():
    def path(name: str) -> str:
        return str(ALGEBRAS / name)

    return path

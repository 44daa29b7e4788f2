from __future__ import annotations

import json
import os
from typing import Any, MutableMapping

import pytest
import pytest_asyncio

from hardylab.causal import HardyGeometry
from hardylab.core.context import LabContext
from hardylab.core.utils import SEED_ENVIRONMENT_VARIABLE
from hardylab.hardy import HardyExperiment


@pytest_asyncio.fixture
async def context() -> LabContext:
    _context = LabContext({}, seed=0)
    yield _context
    await _context.close()


@pytest.fixture(scope="session")
def experiment() -> HardyExperiment:
    return HardyExperiment()


@pytest.fixture(scope="session")
def geometry() -> HardyGeometry:
    return HardyGeometry()


@pytest.fixture(autouse=True)
def unset_seed(monkeypatch):
    monkeypatch.delenv(SEED_ENVIRONMENT_VARIABLE, raising=False)


def write_scenario(directory: str, config: MutableMapping[str, Any]) -> str:
    path = os.path.join(directory, f"{config.get('kind', 'scenario')}.json")
    with open(path, "w") as f:
        json.dump(config, f)
    return path

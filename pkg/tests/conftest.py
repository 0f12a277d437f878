from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def scenario_dir() -> Path:
    return REPO_ROOT / "scenarios"


@pytest.fixture(scope="session")
def repo_root() -> Path:
    return REPO_ROOT

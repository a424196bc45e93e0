from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def lesser_csv() -> Path:
    return REPO_ROOT / "fixtures" / "lesser_1968_1977.csv"


@pytest.fixture
def data_dir() -> Path:
    return Path(__file__).resolve().parent / "data"

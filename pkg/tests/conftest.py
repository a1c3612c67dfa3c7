from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).resolve().parent


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return TESTS_DIR / "corpus"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return TESTS_DIR / "data"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return TESTS_DIR / "data" / "golden"

"""
Shared fixtures for the petalkit test suite.
"""
import json
from pathlib import Path

import pytest

from core.permutations import PetalPermutation
from tests.knots import FIGURE_EIGHT, TREFOIL

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in (
        "PETALKIT_PETAL_BOUND",
        "PETALKIT_DEPTH_BOUND",
        "PETALKIT_BIDIRECTIONAL",
        "PETALKIT_PREFILTER",
        "PETALKIT_THREADS",
        "PETALKIT_SEED",
        "PETALKIT_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def chain_path() -> Path:
    return DATA_DIR / "figure_eight_chain.json"


@pytest.fixture
def chain_data(chain_path):
    return json.loads(chain_path.read_text(encoding="utf-8"))


@pytest.fixture
def trefoil() -> PetalPermutation:
    return PetalPermutation(word=TREFOIL)


@pytest.fixture
def figure_eight() -> PetalPermutation:
    return PetalPermutation(word=FIGURE_EIGHT)

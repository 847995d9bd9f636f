import json
import os
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schema():
    path = os.environ.get("TERRACINI_SCHEMA", ROOT / "docs" / "report_schema.json")
    with open(path) as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def data_dir():
    return ROOT / "tests" / "data"

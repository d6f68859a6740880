from pathlib import Path

import pytest

from datagarden.mapping import parse_mapping
from datagarden.survey import parse_responses, parse_schema

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def sample_schema():
    return parse_schema((DATA_DIR / "sample_schema.dgs").read_text())


@pytest.fixture(scope="session")
def sample_mapping():
    return parse_mapping((DATA_DIR / "sample_mapping.dgm").read_text())


@pytest.fixture(scope="session")
def sample_records(sample_schema):
    return parse_responses((DATA_DIR / "sample_responses.csv").read_text(), sample_schema)

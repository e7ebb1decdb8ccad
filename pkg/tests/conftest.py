import json
from pathlib import Path

import pytest

from sehatbot.gateway import MockGateway
from sehatbot.generation import default_rules, load_policy
from sehatbot.localization import load_lexicon
from sehatbot.service import DATA_DIR, build_mock_stack

TESTS_DIR = Path(__file__).parent


@pytest.fixture(scope="session")
def fixture_queries():
    return json.loads((TESTS_DIR / "data" / "pipeline_fixtures.json").read_text())


@pytest.fixture(scope="session")
def mock_replies():
    return json.loads((DATA_DIR / "mock_replies.json").read_text())["replies"]


@pytest.fixture()
def gateway():
    return MockGateway.from_fixture(DATA_DIR / "mock_replies.json")


@pytest.fixture(scope="session")
def policy():
    return load_policy()


@pytest.fixture(scope="session")
def rules():
    return default_rules()


@pytest.fixture(scope="session")
def shipped_lexicon():
    return load_lexicon(DATA_DIR / "lexicon.tsv")


@pytest.fixture()
def mock_stack(tmp_path):
    return build_mock_stack(
        log_path=tmp_path / "messages.jsonl",
        trace_path=tmp_path / "traces.jsonl",
    )

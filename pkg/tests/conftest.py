from __future__ import annotations

import sys
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import settings

from tiltchar import RootDatum, TablePair

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).resolve().parents[1] / "scripts" / "data"


@lru_cache(maxsize=None)
def datum(label: str) -> RootDatum:
    return RootDatum.builtin(label)


@lru_cache(maxsize=None)
def tables(label: str, max_len: int) -> TablePair:
    return TablePair(datum(label), max_len)


@pytest.fixture
def A1():
    return tables("A1", 12)


@pytest.fixture
def B2():
    return tables("B2", 8)


@pytest.fixture
def figure_blocks_path():
    return DATA / "b2_figure_blocks.json"


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

"""
tests/conftest.py

Shared fixtures.

The autouse `_quiet_logging` fixture points structlog at the current test's
stderr at WARNING level and restores structlog defaults afterwards, so a
test that reconfigures logging (the CLI does) cannot leak a renderer or a
captured stream into the next test.

The autouse `_fresh_settings` fixture clears the cached settings around
every test, so PERM_EQ_* variables set with monkeypatch take effect and
do not outlive the test.
"""
from __future__ import annotations

from collections.abc import Iterator

import pytest
import structlog

from permeq.config import get_settings
from permeq.log import configure_logging


@pytest.fixture(autouse=True)
def _quiet_logging() -> Iterator[None]:
    configure_logging("WARNING")
    yield
    structlog.reset_defaults()


@pytest.fixture(autouse=True)
def _fresh_settings() -> Iterator[None]:
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()

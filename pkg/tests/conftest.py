from __future__ import annotations

import pytest

from del4.codes import base_code


@pytest.fixture(scope="session")
def code_q4():
    return base_code(4)


@pytest.fixture(autouse=True)
def _no_gdd_cache(monkeypatch):
    # Tests build GDDs from scratch unless they set the cache dir themselves.
    monkeypatch.delenv("DEL4_CACHE_DIR", raising=False)

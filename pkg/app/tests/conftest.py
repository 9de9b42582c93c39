# app/tests/conftest.py
"""
Pytest fixtures and configuration for the multiplet engine tests.
"""
import json
import os
import sys
from pathlib import Path

import pytest

# Add the repository root to path for imports
sys.path.insert(0, str(Path(__file__).resolve().parent.parent.parent))

from app.config import DEFAULT_GOLDEN_TABLE, get_settings  # noqa: E402
from app.models.models import AlgebraTag  # noqa: E402
from app.services.golden_service import GoldenTableService  # noqa: E402
from app.services.multiplet_service import MultipletService  # noqa: E402


UNIT_LABELS = (1, 1, 1, 1, 1, 1)


# ============== Service Fixtures ==============


@pytest.fixture(scope="session")
def golden():
    """The bundled so*(12) signature table."""
    return GoldenTableService(DEFAULT_GOLDEN_TABLE)


@pytest.fixture(scope="session")
def service_six(golden):
    """Multiplet service for so*(12)."""
    return MultipletService(rank=6, algebra=AlgebraTag.SO_STAR, golden=golden)


@pytest.fixture(scope="session")
def symbolic_six(service_six):
    """Symbolic so*(12) multiplet, built once per session."""
    return service_six.build_multiplet()


@pytest.fixture(scope="session")
def numeric_unit(service_six):
    """so*(12) multiplet at labels (1,1,1,1,1,1)."""
    return service_six.build_multiplet(UNIT_LABELS)


@pytest.fixture(scope="session")
def symbolic_four():
    """Symbolic so*(8) multiplet."""
    return MultipletService(rank=4).build_multiplet()


# ============== Environment Fixtures ==============


@pytest.fixture
def clean_env(monkeypatch):
    """Remove MULTIPLET_* variables, quieten logging and reset cached settings."""
    for key in list(os.environ):
        if key.upper().startswith("MULTIPLET_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("MULTIPLET_LOG_LEVEL", "WARNING")
    get_settings.cache_clear()
    yield monkeypatch
    get_settings.cache_clear()


@pytest.fixture
def tampered_table(tmp_path):
    """Copy of the golden table with one wrong c-coefficient in chi_b."""
    payload = json.loads(DEFAULT_GOLDEN_TABLE.read_text(encoding="utf-8"))
    for row in payload["rows"]:
        if row["name"] == "chi_b":
            row["c"][0] += 1
    path = tmp_path / "tampered_signatures.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path

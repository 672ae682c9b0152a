from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tsgkit.catalog import build_reference_catalog
from tsgkit.engine import Analysis, fixpoint


@pytest.fixture(scope="session")
def catalog():
    return build_reference_catalog()


@pytest.fixture(scope="session")
def analyses(catalog) -> dict[str, Analysis]:
    """Fixpoint analyses for every catalog member, shared across test modules."""
    return {name: fixpoint(g) for name, g in catalog.members.items()}

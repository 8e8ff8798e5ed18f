import os
from pathlib import Path

import pytest

DATABASE_PATH = Path(__file__).resolve().parents[1] / "data" / "kreuzer_skarke_wp4.txt"

# Fallback sample when the database file is absent: the smooth quintic plus
# the two worked singular examples, the last in its 4-weight form.
SAMPLE_LINES = [
    "5 1 1 1 1 1",
    "120 3 7 20 40 50",
    "1734 91 96 102 578",
]


def database_path() -> Path | None:
    override = os.environ.get("CYTK_DATABASE")
    if override:
        path = Path(override)
        return path if path.exists() else None
    return DATABASE_PATH if DATABASE_PATH.exists() else None


@pytest.fixture(scope="session")
def database_lines() -> list[str] | None:
    path = database_path()
    if path is None:
        return None
    return path.read_text(encoding="utf-8").splitlines()

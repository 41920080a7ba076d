# tests/conftest.py
import os
import tempfile

# The job database has to point somewhere disposable before core.settings is imported
_TEST_DB_DIR = tempfile.mkdtemp(prefix="ursa_tests_")
os.environ["DATABASE_URL"] = f"sqlite:///{os.path.join(_TEST_DB_DIR, 'runs.db')}"
os.environ.setdefault("URSA_SCHEDULER_SECONDS", "3600")
for name in ("URSA_SOLVER", "URSA_TIMEOUT", "URSA_WIDTH", "URSA_ENGINE"):
    os.environ.pop(name, None)

import pytest  # noqa: E402

from core.settings import CORPUS_DIR  # noqa: E402
from symbolic.formula import FormulaStore  # noqa: E402
from verification.harness import load_corpus  # noqa: E402


@pytest.fixture
def store() -> FormulaStore:
    return FormulaStore()


@pytest.fixture(scope="session")
def corpus():
    """Corpus cases by id."""
    return {case.id: case for case in load_corpus(CORPUS_DIR)}


@pytest.fixture
def spec_file(tmp_path):
    """Writes program text to a temporary .urs file and returns its path."""
    def write(text: str, name: str = "spec.urs") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def db_session():
    from database.models import SolveJob
    from database.session import Base, SessionLocal, engine

    Base.metadata.create_all(bind=engine)
    db = SessionLocal()
    try:
        yield db
    finally:
        db.query(SolveJob).delete()
        db.commit()
        db.close()


@pytest.fixture
def client(db_session):
    """FastAPI TestClient without the lifespan (no background scheduler)."""
    from fastapi.testclient import TestClient

    from main import app

    return TestClient(app)


@pytest.fixture
def fake_solver():
    """Command line for the stand-in solver script in a given mode."""
    import shlex
    import sys
    from pathlib import Path

    script = Path(__file__).with_name("fake_solver.py")

    def command(mode: str = "solve") -> str:
        return shlex.join([sys.executable, str(script), mode])
    return command

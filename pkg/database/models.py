# database/models.py
from datetime import datetime, timezone

from sqlalchemy import Column, DateTime, Float, Integer, String, Text

from database.session import Base


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


class SolveJob(Base):
    __tablename__ = "solve_jobs"

    id = Column(Integer, primary_key=True, index=True)
    title = Column(String(150), nullable=False)
    spec_text = Column(Text, nullable=False)
    width = Column(Integer, nullable=False, default=8)
    mode = Column(String(20), nullable=False, default="solve")  # solve, all-models, dimacs-only
    model_limit = Column(Integer, nullable=True)
    timeout = Column(Float, nullable=True)
    status = Column(String(20), default="pending", index=True)  # pending, processing, sat, unsat, unknown, dimacs, error
    report = Column(Text, nullable=True)                        # rendered output, as the CLI prints it
    num_vars = Column(Integer, nullable=True)
    num_clauses = Column(Integer, nullable=True)
    error = Column(Text, nullable=True)
    created_at = Column(DateTime, default=_utcnow)
    finished_at = Column(DateTime, nullable=True)

# api/routes_solve.py
import logging
from datetime import datetime
from typing import List, Literal, Optional

from fastapi import APIRouter, Depends, HTTPException, status
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field
from sqlalchemy.orm import Session

from core.errors import UrsaError
from core.settings import DEFAULT_WIDTH
from database.models import SolveJob
from database.session import get_db
from services.run_manager import RunConfig, RunReport, execute_run
from services.utils import get_smart_title

logger = logging.getLogger("Solve-API")


# --- 1. PYDANTIC SCHEMAS ---
class SolveRequest(BaseModel):
    spec_text: str = Field(..., min_length=1, description="Program source")
    width: int = Field(default=DEFAULT_WIDTH, ge=1, le=64, description="Bits per natural")
    mode: Literal["solve", "all-models"] = Field(default="solve")
    model_limit: Optional[int] = Field(default=None, ge=1, description="Cap for all-models mode")
    timeout: Optional[float] = Field(default=None, gt=0, description="Search budget in seconds")
    engine: Literal["cdcl", "pycosat"] = Field(default="cdcl")


class DimacsRequest(BaseModel):
    spec_text: str = Field(..., min_length=1)
    width: int = Field(default=DEFAULT_WIDTH, ge=1, le=64)
    include_names: bool = Field(default=True, description="Emit 'c name' comments for the unknowns")
    polarity: bool = Field(default=False, description="One-sided definitions (smaller CNF)")


class JobCreate(BaseModel):
    spec_text: str = Field(..., min_length=1, description="Program source")
    width: int = Field(default=DEFAULT_WIDTH, ge=1, le=64)
    mode: Literal["solve", "all-models", "dimacs-only"] = Field(default="solve")
    model_limit: Optional[int] = Field(default=None, ge=1)
    timeout: Optional[float] = Field(default=None, gt=0)


class JobResponse(BaseModel):
    id: int
    title: str
    width: int
    mode: str
    status: str
    report: Optional[str] = None
    num_vars: Optional[int] = None
    num_clauses: Optional[int] = None
    error: Optional[str] = None
    created_at: datetime
    finished_at: Optional[datetime] = None

    class Config:
        from_attributes = True


# --- 2. ROUTER DEFINITION ---
router = APIRouter(prefix="/api/v1", tags=["Solving Operations"])


def _run_or_400(config: RunConfig) -> RunReport:
    try:
        return execute_run(config)
    except UrsaError as e:
        logger.warning(f"[API] rejected program: {e}")
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST,
                            detail={"stage": e.stage, "line": e.line, "col": e.col, "message": e.message})


# --- 3. SYNCHRONOUS ENDPOINTS ---
@router.post("/solve", response_model=RunReport)
def solve_program(request: SolveRequest):
    config = RunConfig(spec_text=request.spec_text, width=request.width, mode=request.mode,
                       model_limit=request.model_limit, timeout=request.timeout, engine=request.engine,
                       solver_command=None)
    report = _run_or_400(config)
    logger.info(f"[API] solve -> {report.status} ({report.num_vars} vars / {report.num_clauses} clauses)")
    return report


@router.post("/dimacs", response_class=PlainTextResponse)
def export_dimacs(request: DimacsRequest):
    config = RunConfig(spec_text=request.spec_text, width=request.width, mode="dimacs-only",
                       dimacs_path="-", include_names=request.include_names, polarity=request.polarity)
    return PlainTextResponse(_run_or_400(config).dimacs)


# --- 4. QUEUED JOBS ---
@router.post("/jobs", response_model=JobResponse, status_code=status.HTTP_201_CREATED)
def queue_job(job_data: JobCreate, db: Session = Depends(get_db)):
    new_job = SolveJob(**job_data.model_dump(), title=get_smart_title(job_data.spec_text), status="pending")
    db.add(new_job)
    db.commit()
    db.refresh(new_job)
    logger.info(f"[API] queued Job {new_job.id}: {new_job.title}")
    return new_job


@router.get("/jobs/pending", response_model=List[JobResponse])
def get_pending_jobs(db: Session = Depends(get_db)):
    return db.query(SolveJob).filter(SolveJob.status == "pending").order_by(SolveJob.id).all()


@router.get("/jobs/{job_id}", response_model=JobResponse)
def get_job(job_id: int, db: Session = Depends(get_db)):
    job = db.query(SolveJob).filter(SolveJob.id == job_id).first()
    if not job:
        raise HTTPException(status_code=404, detail="Job not found")
    return job

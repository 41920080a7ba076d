# api/routes_corpus.py
import logging
from typing import Dict, List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field

from core.errors import CorpusError, UrsaError
from verification.harness import CaseResult, get_case, load_corpus, run_case

logger = logging.getLogger("Corpus-API")


# --- 1. PYDANTIC SCHEMAS ---
class CaseSummary(BaseModel):
    id: str
    role: str
    width: int
    summary: str
    reference: str
    slow: bool
    expected_status: str
    knobs: Dict[str, int]


class CaseRunRequest(BaseModel):
    knobs: Dict[str, int] = Field(default_factory=dict, description="Size overrides, e.g. {'nV': 4}")
    timeout: Optional[float] = Field(default=None, gt=0)


# --- 2. ROUTER DEFINITION ---
router = APIRouter(prefix="/api/v1/corpus", tags=["Corpus"])


@router.get("", response_model=List[CaseSummary])
def list_cases():
    try:
        cases = load_corpus()
    except CorpusError as e:
        raise HTTPException(status_code=500, detail=e.message)
    return [CaseSummary(id=c.id, role=c.manifest.role, width=c.manifest.width, summary=c.manifest.summary,
                        reference=c.manifest.reference, slow=c.manifest.slow,
                        expected_status=c.manifest.expect.status, knobs=c.manifest.knobs)
            for c in cases]


@router.post("/{case_id}/run", response_model=CaseResult)
def run_corpus_case(case_id: str, request: Optional[CaseRunRequest] = None):
    request = request or CaseRunRequest()
    try:
        case = get_case(case_id)
    except CorpusError as e:
        raise HTTPException(status_code=404, detail=e.message)
    try:
        result = run_case(case, request.knobs, timeout=request.timeout)
    except UrsaError as e:
        logger.warning(f"[API] corpus case {case_id} failed: {e}")
        raise HTTPException(status_code=400, detail={"stage": e.stage, "message": e.message})
    return result

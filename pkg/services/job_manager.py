# services/job_manager.py
import logging
from datetime import datetime, timezone

from database.models import SolveJob
from database.session import SessionLocal
from services.run_manager import RunConfig, run

logger = logging.getLogger("Job-Manager")

JOB_STATUS = {"SAT": "sat", "UNSAT": "unsat", "UNKNOWN": "unknown", "DIMACS": "dimacs", "ERROR": "error"}


def process_single_job(job_id: int):
    """
    Orchestrates one stored run: DB Fetch -> Pipeline -> Persist Report.
    Pipeline failures end in status 'error' with the message stored on the row.
    """
    db = SessionLocal()

    try:
        # 1. Retrieve the job from the database
        job = db.query(SolveJob).filter(SolveJob.id == job_id).first()
        # Accept BOTH 'pending' (direct call) and 'processing' (claimed by the Scheduler)
        if not job or job.status not in ["pending", "processing"]:
            logger.warning(f"[Manager] Job {job_id} aborted. Invalid status: {job.status if job else 'Not Found'}")
            return

        logger.info(f"[Manager] Starting run for Job {job_id} ({job.mode}, width {job.width})")
        job.status = "processing"
        db.commit()

        # 2. Run the pipeline
        config = RunConfig(spec_text=job.spec_text, width=job.width, mode=job.mode,
                           model_limit=job.model_limit, timeout=job.timeout)
        report = run(config)

        # 3. Persist the outcome
        job.status = JOB_STATUS[report.status]
        job.report = report.dimacs if report.status == "DIMACS" else report.render(job.mode, show_stats=True)
        job.num_vars = report.num_vars
        job.num_clauses = report.num_clauses
        job.error = report.error
        job.finished_at = datetime.now(timezone.utc)
        db.commit()
        logger.info(f"[Manager] Job {job_id} finished with status '{job.status}'")

    except Exception as e:
        logger.error(f"[Manager] Critical failure on Job {job_id}: {e}")
        db.rollback()
        job = db.query(SolveJob).filter(SolveJob.id == job_id).first()
        if job:
            job.status = "error"
            job.error = str(e)
            job.finished_at = datetime.now(timezone.utc)
            db.commit()
    finally:
        db.close()

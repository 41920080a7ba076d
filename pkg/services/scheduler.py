# services/scheduler.py
import logging
from apscheduler.schedulers.background import BackgroundScheduler

from core.settings import SCHEDULER_SECONDS
from database.session import SessionLocal
from database.models import SolveJob
from services.job_manager import process_single_job

logger = logging.getLogger("Scheduler")


def process_pending_jobs():
    """Job that runs on an interval to drain queued solve jobs, oldest first."""
    db = SessionLocal()
    try:
        # 1. Fetch jobs that are still waiting
        pending_jobs = db.query(SolveJob).filter(
            SolveJob.status == "pending"
        ).order_by(SolveJob.id).all()

        if not pending_jobs:
            return

        for job in pending_jobs:
            logger.info(f"⏰ Picking up Job ID: {job.id}. Delegating to Manager...")
            # Switch status to 'processing' to avoid duplicate executions in the next cycle
            job.status = "processing"
            db.commit()

            # 2. Delegate the pipeline run to the Manager
            process_single_job(job.id)

    except Exception as e:
        logger.error(f"Error in process_pending_jobs: {e}")
    finally:
        db.close()


scheduler = BackgroundScheduler()
# One drain at a time; a long solve simply delays the next tick
scheduler.add_job(process_pending_jobs, "interval", seconds=SCHEDULER_SECONDS, max_instances=1)


def start_scheduler():
    scheduler.start()
    logger.info("⏰ Background job drain started successfully.")


def stop_scheduler():
    scheduler.shutdown()
    logger.info("⏰ Background job drain stopped.")

# main.py
import uvicorn
import logging
from fastapi import FastAPI
from contextlib import asynccontextmanager

from core.logging_setup import configure_logging
from core.settings import CORPUS_DIR, LOG_LEVEL
from database.session import engine, Base
import database.models

from api.routes_solve import router as solve_router
from api.routes_corpus import router as corpus_router
from services.scheduler import start_scheduler, stop_scheduler
from verification.harness import load_corpus

# Configure global logging
configure_logging(LOG_LEVEL)

logger = logging.getLogger("SymReduce-Main")


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info("===================================================")
    logger.info("🚀 SYMREDUCE ENGINE - Starting Up...")
    logger.info("===================================================")

    # 1. Database Initialization
    try:
        Base.metadata.create_all(bind=engine)
        logger.info(f"[Database] Tables verified successfully on {engine.url.render_as_string()}.")
    except Exception as e:
        logger.error(f"[Database Error] Check your connection: {e}")

    # 2. Corpus verification
    try:
        cases = load_corpus()
        logger.info(f"[Corpus] {len(cases)} cases available from {CORPUS_DIR}")
    except Exception as e:
        logger.warning(f"[Corpus] Not available: {e}")

    # 3. Start the background job drain
    start_scheduler()

    yield

    logger.info("Shutting down SymReduce Engine gracefully...")
    stop_scheduler()

app = FastAPI(
    title="SymReduce Engine API",
    lifespan=lifespan
)


@app.get("/health")
async def health():
    return {"status": "alive"}

# Registering Routers
app.include_router(solve_router)
app.include_router(corpus_router)

if __name__ == "__main__":
    # Ensure uvicorn runs the app instance
    uvicorn.run("main:app", host="0.0.0.0", port=8000, reload=True)

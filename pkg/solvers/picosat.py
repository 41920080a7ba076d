# solvers/picosat.py
import logging
import time

from cnf.tseitin import Cnf
from core.errors import SolverError
from solvers.outcome import Budget, SolveOutcome, SolveStats, SolveStatus, UNLIMITED, verify_model

logger = logging.getLogger("PicoSAT-Solver")

# pycosat only knows propagation limits; this converts a time budget roughly
PROPAGATIONS_PER_SECOND = 2_000_000


def solve_pycosat(cnf: Cnf, budget: Budget = UNLIMITED) -> SolveOutcome:
    """Solves `cnf` with the in-process PicoSAT binding, same contract as the embedded engine."""
    try:
        import pycosat
    except ImportError:
        raise SolverError("engine 'pycosat' requested but the pycosat package is not installed")

    started = time.monotonic()
    if any(len(clause) == 0 for clause in cnf.clauses):
        return SolveOutcome(SolveStatus.UNSAT, None, SolveStats(wall_time=0.0), engine="pycosat")

    prop_limit = 0
    if budget.time_limit is not None:
        prop_limit = max(1, int(budget.time_limit * PROPAGATIONS_PER_SECOND))
    result = pycosat.solve([list(c) for c in cnf.clauses], vars=cnf.num_vars, prop_limit=prop_limit)
    stats = SolveStats(wall_time=time.monotonic() - started)

    if result == "UNSAT":
        outcome = SolveOutcome(SolveStatus.UNSAT, None, stats, engine="pycosat")
    elif result == "UNKNOWN":
        outcome = SolveOutcome(SolveStatus.UNKNOWN, None, stats, engine="pycosat")
    else:
        model = {v: False for v in range(1, cnf.num_vars + 1)}
        model.update({abs(lit): lit > 0 for lit in result})
        verify_model(cnf.clauses, model, engine="pycosat")
        outcome = SolveOutcome(SolveStatus.SAT, model, stats, engine="pycosat")

    logger.info(f"[PicoSAT] {outcome.status.value} in {stats.wall_time:.3f}s")
    return outcome

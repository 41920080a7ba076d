# solvers/external.py
import logging
import os
import shlex
import subprocess
import tempfile
import time

from cnf.dimacs import SAT, UNSAT, parse_dimacs_model, write_dimacs
from cnf.tseitin import Cnf
from core.errors import CnfFormatError, ExternalSolverError
from solvers.outcome import Budget, SolveOutcome, SolveStats, SolveStatus, UNLIMITED, verify_model

logger = logging.getLogger("External-Solver")


def solve_external(cnf: Cnf, command: str, budget: Budget = UNLIMITED) -> SolveOutcome:
    """
    Runs `command <dimacs file>` and reads SAT-competition output from stdout.
    Exit codes 10/20 are fine as long as an 's' line is present. A timeout gives
    UNKNOWN; a crash, a signal or unreadable output is an ExternalSolverError.
    """
    argv = shlex.split(command)
    if not argv:
        raise ExternalSolverError("empty solver command")

    fd, path = tempfile.mkstemp(prefix="ursa_", suffix=".cnf")
    started = time.monotonic()
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(write_dimacs(cnf))

        logger.info(f"[External] running {argv[0]} on {cnf.num_vars} vars / {cnf.num_clauses} clauses")
        try:
            proc = subprocess.run(argv + [path], capture_output=True, text=True, timeout=budget.time_limit)
        except subprocess.TimeoutExpired:
            logger.warning(f"[External] {argv[0]} exceeded {budget.time_limit}s, reporting UNKNOWN")
            return SolveOutcome(SolveStatus.UNKNOWN, None,
                                SolveStats(wall_time=time.monotonic() - started), engine="external")
        except OSError as e:
            raise ExternalSolverError(f"cannot start '{argv[0]}': {e}")

        stats = SolveStats(wall_time=time.monotonic() - started)
        if proc.returncode < 0:
            raise ExternalSolverError(f"'{argv[0]}' was killed by signal {-proc.returncode}")

        try:
            answer = parse_dimacs_model(proc.stdout, cnf.num_vars)
        except CnfFormatError as e:
            stderr_tail = proc.stderr.strip().splitlines()[-1:] if proc.stderr else []
            raise ExternalSolverError(
                f"unreadable output from '{argv[0]}' (exit {proc.returncode}): {e.message}"
                + (f"; stderr: {stderr_tail[0]}" if stderr_tail else ""))

        if answer.status == SAT:
            model = {v: answer.assignment.get(v, False) for v in range(1, cnf.num_vars + 1)}
            verify_model(cnf.clauses, model, engine=argv[0])
            outcome = SolveOutcome(SolveStatus.SAT, model, stats, engine="external")
        elif answer.status == UNSAT:
            outcome = SolveOutcome(SolveStatus.UNSAT, None, stats, engine="external")
        else:
            outcome = SolveOutcome(SolveStatus.UNKNOWN, None, stats, engine="external")

        logger.info(f"[External] {outcome.status.value} (exit {proc.returncode}) in {stats.wall_time:.3f}s")
        return outcome
    finally:
        if os.path.exists(path):
            os.remove(path)

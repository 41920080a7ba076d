# solvers/engine.py
import logging

from cnf.tseitin import Cnf
from core.errors import SolverError
from solvers.cdcl import solve as solve_cdcl
from solvers.external import solve_external
from solvers.outcome import Budget, SolveOutcome, UNLIMITED
from solvers.picosat import solve_pycosat

logger = logging.getLogger("Solver-Router")

ENGINES = ("cdcl", "pycosat")


def solve_cnf(cnf: Cnf, engine: str = "cdcl", solver_command: str | None = None,
              budget: Budget = UNLIMITED) -> SolveOutcome:
    """Routes a CNF to the external command when one is given, otherwise to the named in-process engine."""
    if solver_command:
        return solve_external(cnf, solver_command, budget)

    engine = engine.lower()
    if engine == "cdcl":
        return solve_cdcl(cnf, budget)
    if engine == "pycosat":
        return solve_pycosat(cnf, budget)
    raise SolverError(f"unknown engine '{engine}' (choose one of: {', '.join(ENGINES)})")

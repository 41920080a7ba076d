# solvers/enumerate.py
import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass, field

from cnf.tseitin import Cnf
from solvers.cdcl import CdclSolver
from solvers.engine import solve_cnf
from solvers.outcome import Budget, SolveOutcome, SolveStats, SolveStatus, UNLIMITED

logger = logging.getLogger("Model-Enumerator")


@dataclass
class Enumeration:
    models: list[dict[int, bool]] = field(default_factory=list)
    # True when the search proved there are no further projected models
    complete: bool = False
    # True when a conflict/time budget stopped the search early
    budget_exhausted: bool = False
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def status(self) -> SolveStatus:
        if self.models:
            return SolveStatus.SAT
        return SolveStatus.UNSAT if self.complete else SolveStatus.UNKNOWN


def _blocking_clause(model: dict[int, bool], projection: Sequence[int]) -> list[int]:
    return [-v if model[v] else v for v in projection]


def _remaining(budget: Budget, deadline: float | None) -> Budget | None:
    if deadline is None:
        return budget
    left = deadline - time.monotonic()
    if left <= 0:
        return None
    return Budget(budget.conflict_limit, left)


def enumerate_models(cnf: Cnf, projection: Sequence[int] | None = None, limit: int | None = None,
                     budget: Budget = UNLIMITED, engine: str = "cdcl",
                     solver_command: str | None = None) -> Enumeration:
    """
    Lists models that differ on `projection` (default: the named unknowns' bits,
    or every variable when the CNF has no names). After each model a blocking
    clause over the projection is added and the search resumes.
    The time budget covers the whole enumeration, the conflict budget each call.
    """
    if projection is None:
        projection = cnf.projection() or list(range(1, cnf.num_vars + 1))
    projection = list(dict.fromkeys(projection))
    if any(not 1 <= v <= cnf.num_vars for v in projection):
        raise ValueError("projection refers to variables outside the CNF")

    result = Enumeration()
    deadline = budget.deadline()
    incremental = solver_command is None and engine == "cdcl"
    solver = CdclSolver(cnf.num_vars, cnf.clauses, frozen=projection) if incremental else None
    blocking: list[list[int]] = []

    while limit is None or len(result.models) < limit:
        call_budget = _remaining(budget, deadline)
        if call_budget is None:
            result.budget_exhausted = True
            break

        if solver is not None:
            outcome: SolveOutcome = solver.solve(call_budget)
        else:
            extended = Cnf(cnf.num_vars, cnf.clauses + blocking, cnf.name_map)
            outcome = solve_cnf(extended, engine, solver_command, call_budget)
        _accumulate(result.stats, outcome.stats, incremental)

        if outcome.status is SolveStatus.UNKNOWN:
            result.budget_exhausted = True
            break
        if outcome.status is SolveStatus.UNSAT:
            result.complete = True
            break

        result.models.append(outcome.model)
        if not projection:
            result.complete = True
            break
        clause = _blocking_clause(outcome.model, projection)
        if solver is not None:
            solver.add_clause(clause)
        else:
            blocking.append(clause)

    logger.info(f"[Enumerate] {len(result.models)} models over {len(projection)} projected vars "
                f"(complete={result.complete}, budget_exhausted={result.budget_exhausted})")
    return result


def _accumulate(total: SolveStats, step: SolveStats, incremental: bool):
    # The incremental solver reports running totals, the one-shot engines per call
    if incremental:
        for name, value in vars(step).items():
            setattr(total, name, value)
    else:
        for name, value in vars(step).items():
            setattr(total, name, getattr(total, name) + value)

# services/run_manager.py
import logging
import time
from dataclasses import dataclass
from typing import Literal

from pydantic import BaseModel, Field, model_validator

from cnf.dimacs import write_dimacs
from cnf.tseitin import Cnf, tseitin
from core.errors import UrsaError
from core.settings import DEFAULT_ENGINE, DEFAULT_SOLVER_COMMAND, DEFAULT_TIMEOUT, DEFAULT_WIDTH, MAX_LOOP_ITERATIONS
from interpreter.executor import ExecResult, execute
from language.parser import parse_source
from services.report import (
    EXIT_ERROR, EXIT_SAT, EXIT_UNKNOWN, EXIT_UNSAT, UNKNOWN_MESSAGE, UNSAT_MESSAGE,
    decode_model, model_lines, print_lines, stats_lines,
)
from solvers.engine import solve_cnf
from solvers.enumerate import enumerate_models
from solvers.outcome import Budget, SolveStatus

logger = logging.getLogger("Run-Manager")

RunMode = Literal["solve", "all-models", "dimacs-only"]
RunStatus = Literal["SAT", "UNSAT", "UNKNOWN", "DIMACS", "ERROR"]

EXIT_CODES = {"SAT": EXIT_SAT, "UNSAT": EXIT_UNSAT, "UNKNOWN": EXIT_UNKNOWN, "DIMACS": EXIT_SAT, "ERROR": EXIT_ERROR}


# --- 1. RUN OPTIONS ---
class RunConfig(BaseModel):
    spec_path: str | None = None
    spec_text: str | None = None
    width: int = Field(DEFAULT_WIDTH, ge=1, description="Bits per natural")
    mode: RunMode = "solve"
    solver_command: str | None = Field(DEFAULT_SOLVER_COMMAND, description="External DIMACS solver, run as `cmd file.cnf`")
    engine: Literal["cdcl", "pycosat"] = DEFAULT_ENGINE
    model_limit: int | None = Field(None, ge=1, description="Stop all-models mode after this many models")
    timeout: float | None = Field(DEFAULT_TIMEOUT, gt=0, description="Seconds for the whole search")
    conflict_limit: int | None = Field(None, ge=1)
    dimacs_path: str | None = Field(None, description="Where dimacs-only mode writes the CNF; '-' is stdout")
    include_names: bool = False
    stats: bool = False
    polarity: bool = False
    max_loop_iterations: int = Field(MAX_LOOP_ITERATIONS, ge=1)

    @model_validator(mode="after")
    def check_source(self):
        if (self.spec_path is None) == (self.spec_text is None):
            raise ValueError("exactly one of spec_path and spec_text must be given")
        return self

    def budget(self) -> Budget:
        return Budget(self.conflict_limit, self.timeout)


class RunReport(BaseModel):
    status: RunStatus
    exit_code: int
    models: list[list[str]] = []
    assignments: list[dict[str, bool | int]] = []
    prints: list[str] = []
    stats: dict[str, int | float | str] = {}
    dimacs: str | None = None
    dimacs_to_stdout: bool = False
    complete: bool | None = None
    num_vars: int | None = None
    num_clauses: int | None = None
    error: str | None = None
    error_stage: str | None = None

    def render(self, mode: RunMode = "solve", show_stats: bool = False) -> str:
        """The text a CLI user sees on stdout."""
        lines = list(self.prints)
        if self.status == "ERROR":
            return ""
        if self.status == "DIMACS":
            if show_stats:
                lines += stats_lines(self.stats)
            text = "\n".join(lines) + ("\n" if lines else "")
            return text + (self.dimacs or "") if self.dimacs_to_stdout else text

        if mode == "all-models" and self.status != "UNKNOWN":
            for number, model in enumerate(self.models, start=1):
                lines.append(f"Solution {number}:")
                lines += model
            found = f"Found {len(self.models)} solution(s)."
            if not self.complete:
                found += " (search stopped early)"
            lines.append(found if self.models else UNSAT_MESSAGE)
        elif self.status == "SAT":
            lines += self.models[0]
        elif self.status == "UNSAT":
            lines.append(UNSAT_MESSAGE)
        else:
            lines.append(UNKNOWN_MESSAGE)

        if show_stats:
            lines += stats_lines(self.stats)
        return "\n".join(lines) + ("\n" if lines else "")


# --- 2. PIPELINE STAGES ---
@dataclass
class Compiled:
    result: ExecResult
    cnf: Cnf


def load_source(config: RunConfig) -> str:
    if config.spec_text is not None:
        return config.spec_text
    try:
        with open(config.spec_path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise UrsaError(f"cannot read '{config.spec_path}': {e.strerror}", stage="input")


def compile_source(source: str, width: int, max_loop_iterations: int | None = None,
                   polarity: bool = False) -> Compiled:
    """Parses, executes and encodes a program; the returned CNF keeps the unknowns' names."""
    program = parse_source(source)
    result = execute(program, width, max_loop_iterations)
    cnf = tseitin(result.store, result.assertion, result.names, polarity)
    return Compiled(result, cnf)


def execute_run(config: RunConfig) -> RunReport:
    """Runs the whole pipeline for `config`; pipeline failures propagate as UrsaError."""
    started = time.perf_counter()
    compiled = compile_source(load_source(config), config.width, config.max_loop_iterations, config.polarity)
    result, cnf = compiled.result, compiled.cnf

    stats: dict[str, int | float | str] = {
        "width": config.width,
        "variables": cnf.num_vars,
        "clauses": cnf.num_clauses,
        **result.stats,
    }
    report = RunReport(status="ERROR", exit_code=EXIT_ERROR, prints=print_lines(result.prints),
                       num_vars=cnf.num_vars, num_clauses=cnf.num_clauses)

    # 1. DIMACS export only
    if config.mode == "dimacs-only":
        report.dimacs = write_dimacs(cnf, config.include_names)
        target = config.dimacs_path or "-"
        if target == "-":
            report.dimacs_to_stdout = True
        else:
            try:
                with open(target, "w", encoding="utf-8") as handle:
                    handle.write(report.dimacs)
            except OSError as e:
                raise UrsaError(f"cannot write '{target}': {e.strerror}", stage="output")
            logger.info(f"[Manager] DIMACS written to {target}")
        report.status = "DIMACS"

    # 2. Every model, projected on the unknowns
    elif config.mode == "all-models":
        enumeration = enumerate_models(cnf, limit=config.model_limit, budget=config.budget(),
                                       engine=config.engine, solver_command=config.solver_command)
        report.assignments = [decode_model(result.registry, m) for m in enumeration.models]
        report.models = [model_lines(result.registry, m) for m in enumeration.models]
        report.complete = enumeration.complete
        report.status = enumeration.status.value
        stats.update(enumeration.stats.as_dict())
        stats["models"] = len(enumeration.models)

    # 3. One model
    else:
        outcome = solve_cnf(cnf, config.engine, config.solver_command, config.budget())
        if outcome.status is SolveStatus.SAT:
            report.assignments = [decode_model(result.registry, outcome.model)]
            report.models = [model_lines(result.registry, outcome.model)]
        report.status = outcome.status.value
        stats.update(outcome.stats.as_dict())
        stats["engine"] = outcome.engine

    stats["total_seconds"] = round(time.perf_counter() - started, 4)
    report.stats = stats
    report.exit_code = EXIT_CODES[report.status]
    logger.info(f"[Manager] {config.mode} finished with {report.status} "
                f"({cnf.num_vars} vars / {cnf.num_clauses} clauses, {stats['total_seconds']}s)")
    return report


def run(config: RunConfig) -> RunReport:
    """Like `execute_run`, but every failure becomes an ERROR report instead of an exception."""
    try:
        return execute_run(config)
    except UrsaError as e:
        logger.error(f"[Manager] {e}")
        return RunReport(status="ERROR", exit_code=EXIT_ERROR, error=str(e), error_stage=e.stage)
    except Exception as e:
        logger.exception(f"[Manager] unexpected failure: {e}")
        return RunReport(status="ERROR", exit_code=EXIT_ERROR, error=f"internal error: {e}", error_stage="internal")

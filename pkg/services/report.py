# services/report.py
from collections.abc import Mapping, Sequence

from interpreter.environment import Unknown
from interpreter.values import render

# Process exit codes shared by the CLI, the job store and the corpus harness
EXIT_SAT = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_UNSAT = 20
EXIT_UNKNOWN = 30

UNSAT_MESSAGE = "No solution: the assertion is unsatisfiable."
UNKNOWN_MESSAGE = "No answer: the search budget was exhausted."


def decode_model(registry: Sequence[Unknown], assignment: Mapping[int, bool]) -> dict[str, int | bool]:
    """Values of the unknowns under a CNF model, keyed by display name in introduction order."""
    values: dict[str, int | bool] = {}
    for unknown in registry:
        if unknown.kind == "b":
            values[unknown.display] = bool(assignment[unknown.var_ids[0]])
        else:
            values[unknown.display] = sum(1 << i for i, v in enumerate(unknown.var_ids) if assignment[v])
    return values


def model_lines(registry: Sequence[Unknown], assignment: Mapping[int, bool]) -> list[str]:
    return [f"{name}={render(value)};" for name, value in decode_model(registry, assignment).items()]


def report_model(registry: Sequence[Unknown], assignment: Mapping[int, bool]) -> str:
    """One `name=value;` line per unknown; empty text for an empty registry."""
    lines = model_lines(registry, assignment)
    return "\n".join(lines) + ("\n" if lines else "")


def print_lines(prints: Sequence[tuple[str, int | bool]]) -> list[str]:
    return [f"{text}={render(value)};" for text, value in prints]


def stats_lines(stats: Mapping[str, int | float | str]) -> list[str]:
    return [f"c {key} {value}" for key, value in stats.items()]

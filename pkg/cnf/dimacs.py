# cnf/dimacs.py
import logging
from typing import NamedTuple

from cnf.tseitin import Cnf
from core.errors import CnfFormatError

logger = logging.getLogger("CNF-Encoder")

SAT = "SAT"
UNSAT = "UNSAT"
UNKNOWN = "UNKNOWN"

_STATUS_LINES = {
    "SATISFIABLE": SAT,
    "UNSATISFIABLE": UNSAT,
    "UNKNOWN": UNKNOWN,
    "INDETERMINATE": UNKNOWN,
}


class SolverAnswer(NamedTuple):
    status: str
    assignment: dict[int, bool] | None


def write_dimacs(cnf: Cnf, include_names: bool = False) -> str:
    lines = []
    if include_names:
        lines += [f"c name {name} {' '.join(map(str, ids))}" for name, ids in cnf.name_map.items()]
    lines.append(f"p cnf {cnf.num_vars} {cnf.num_clauses}")
    lines += [" ".join(map(str, [*clause, 0])) for clause in cnf.clauses]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Cnf:
    """
    Reads a DIMACS CNF file. `c name <name> <ids...>` comments restore the
    name map; other comments are skipped and a '%' line ends the clause list.
    """
    header: tuple[int, int] | None = None
    name_map: dict[str, list[int]] = {}
    clauses: list[list[int]] = []
    current: list[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split()
            if len(parts) >= 3 and parts[1] == "name":
                try:
                    name_map[parts[2]] = [int(tok) for tok in parts[3:]]
                except ValueError:
                    raise CnfFormatError(f"bad name comment '{line}'", lineno, 1)
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfFormatError(f"bad problem line '{line}'", lineno, 1)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfFormatError(f"bad problem line '{line}'", lineno, 1)
            continue
        if header is None:
            raise CnfFormatError("clause before the 'p cnf' header", lineno, 1)

        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfFormatError(f"'{tok}' is not a literal", lineno, 1)
            if lit == 0:
                clauses.append(current)
                current = []
            elif abs(lit) > header[0]:
                raise CnfFormatError(f"literal {lit} exceeds the declared {header[0]} variables", lineno, 1)
            else:
                current.append(lit)

    if header is None:
        raise CnfFormatError("missing 'p cnf' header")
    if current:
        raise CnfFormatError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise CnfFormatError(f"header declares {header[1]} clauses, found {len(clauses)}")
    for name, ids in name_map.items():
        if any(not 1 <= v <= header[0] for v in ids):
            raise CnfFormatError(f"name '{name}' refers to an undeclared variable")
    return Cnf(header[0], clauses, name_map)


def parse_dimacs_model(output: str, num_vars: int | None = None) -> SolverAnswer:
    """
    Parses SAT-competition solver output ('s' status line plus 'v' value lines).
    Variables not mentioned default to false; `num_vars` fills them in.
    """
    status = None
    assignment: dict[int, bool] = {}
    for lineno, raw in enumerate(output.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("s "):
            word = line[2:].strip().upper()
            if word not in _STATUS_LINES:
                raise CnfFormatError(f"unknown status line '{line}'", lineno, 1)
            if status is not None and _STATUS_LINES[word] != status:
                raise CnfFormatError("conflicting status lines", lineno, 1)
            status = _STATUS_LINES[word]
        elif line.startswith("v ") or line == "v":
            for tok in line.split()[1:]:
                try:
                    lit = int(tok)
                except ValueError:
                    raise CnfFormatError(f"'{tok}' is not a literal", lineno, 1)
                if lit == 0:
                    continue
                value = lit > 0
                if assignment.get(abs(lit), value) != value:
                    raise CnfFormatError(f"variable {abs(lit)} is assigned both ways", lineno, 1)
                assignment[abs(lit)] = value

    if status is None:
        raise CnfFormatError("solver output has no 's' status line")
    if status != SAT:
        return SolverAnswer(status, None)
    for var in range(1, (num_vars or 0) + 1):
        assignment.setdefault(var, False)
    return SolverAnswer(SAT, assignment)


def format_competition_output(status: str, assignment: dict[int, bool] | None = None,
                              per_line: int = 10) -> str:
    """The inverse of `parse_dimacs_model`, used for round trips and fake solvers."""
    word = {SAT: "SATISFIABLE", UNSAT: "UNSATISFIABLE"}.get(status, "UNKNOWN")
    lines = [f"s {word}"]
    if status == SAT:
        lits = [v if assignment[v] else -v for v in sorted(assignment or {})] + [0]
        for i in range(0, len(lits), per_line):
            lines.append("v " + " ".join(map(str, lits[i:i + per_line])))
    return "\n".join(lines) + "\n"

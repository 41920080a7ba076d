# solvers/outcome.py
import time
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum

from core.errors import ModelVerificationError


class SolveStatus(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


@dataclass
class SolveStats:
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    learnts: int = 0
    wall_time: float = 0.0

    def as_dict(self) -> dict[str, int | float]:
        return {
            "conflicts": self.conflicts,
            "decisions": self.decisions,
            "propagations": self.propagations,
            "restarts": self.restarts,
            "learnts": self.learnts,
            "wall_time": round(self.wall_time, 4),
        }


@dataclass
class SolveOutcome:
    status: SolveStatus
    model: dict[int, bool] | None = None
    stats: SolveStats = field(default_factory=SolveStats)
    engine: str = "cdcl"

    @property
    def is_sat(self) -> bool:
        return self.status is SolveStatus.SAT


@dataclass(frozen=True)
class Budget:
    """Per-call search limits; None means unlimited."""
    conflict_limit: int | None = None
    time_limit: float | None = None

    def deadline(self, started: float | None = None) -> float | None:
        if self.time_limit is None:
            return None
        return (started if started is not None else time.monotonic()) + self.time_limit


UNLIMITED = Budget()


def verify_model(clauses: Iterable[Sequence[int]], model: Mapping[int, bool], engine: str = "cdcl"):
    """Raises ModelVerificationError unless every clause has a true literal under `model`."""
    for index, clause in enumerate(clauses):
        if not any(model.get(abs(lit), False) == (lit > 0) for lit in clause):
            raise ModelVerificationError(
                f"{engine} returned a model that falsifies clause #{index} {list(clause)}")

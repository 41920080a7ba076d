# interpreter/environment.py
from dataclasses import dataclass, field

from interpreter.values import Value


@dataclass(frozen=True, slots=True)
class Unknown:
    """A value the program reads before defining; the solver has to find it."""
    name: str
    indices: tuple[int, ...]
    var_ids: tuple[int, ...]

    @property
    def kind(self) -> str:
        return self.name[0]

    @property
    def display(self) -> str:
        return self.name + "".join(f"[{i}]" for i in self.indices)


@dataclass
class Environment:
    scalars: dict[str, Value] = field(default_factory=dict)
    arrays: dict[tuple[str, tuple[int, ...]], Value] = field(default_factory=dict)
    registry: list[Unknown] = field(default_factory=list)

    def get(self, name: str, indices: tuple[int, ...] = ()) -> Value | None:
        if indices:
            return self.arrays.get((name, indices))
        return self.scalars.get(name)

    def set(self, name: str, indices: tuple[int, ...], value: Value):
        if indices:
            self.arrays[(name, indices)] = value
        else:
            self.scalars[name] = value

    def register(self, unknown: Unknown):
        self.registry.append(unknown)

    def names(self) -> dict[str, tuple[int, ...]]:
        """Registry as display name -> formula variable ids, in introduction order."""
        return {u.display: u.var_ids for u in self.registry}
